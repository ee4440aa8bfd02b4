#include "orbh/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace orbh {

VarId::VarId(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || i == j || j > 255) {
    throw std::invalid_argument("VarId: need 1 <= i < j <= 255, got {" + std::to_string(i) + "," +
                                std::to_string(j) + "}");
  }
  code_ = static_cast<std::uint16_t>((i << 8) | j);
}

int VarId::index(int n) const {
  // pairs (a, *) with a < i come first: sum_{a<i} (n - a)
  const int a = i();
  return (a - 1) * n - (a - 1) * a / 2 + (j() - a - 1);
}

std::string VarId::to_string() const {
  return "x{" + std::to_string(i()) + "," + std::to_string(j()) + "}";
}

int num_vars(int n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::vector<VarId> all_vars(int n) {
  std::vector<VarId> out;
  out.reserve(num_vars(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

// ---------------------------------------------------------------- Monomial

void Monomial::finish() {
  degree_ = 0;
  mask_ = 0;
  for (const auto& f : factors_) {
    degree_ += f.exp;
    mask_ |= std::uint64_t{1} << ((f.var * 0x9E37u >> 4) & 63);
  }
}

Monomial Monomial::variable(VarId v, int exp) {
  Monomial m;
  if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
  if (exp > 0) m.factors_.push_back({v.code(), static_cast<std::uint16_t>(exp)});
  m.finish();
  return m;
}

Monomial Monomial::product(std::span<const VarId> vars) {
  std::map<std::uint16_t, int> exps;
  for (const auto& v : vars) ++exps[v.code()];
  Monomial m;
  for (auto [code, e] : exps) m.factors_.push_back({code, static_cast<std::uint16_t>(e)});
  m.finish();
  return m;
}

int Monomial::exponent(VarId v) const {
  for (const auto& f : factors_) {
    if (f.var == v.code()) return f.exp;
  }
  return 0;
}

bool Monomial::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.exp == 1; });
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_ || (mask_ & ~other.mask_) != 0) return false;
  auto it = other.factors_.begin();
  for (const auto& f : factors_) {
    while (it != other.factors_.end() && it->var < f.var) ++it;
    if (it == other.factors_.end() || it->var != f.var || it->exp < f.exp) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  auto it = divisor.factors_.begin();
  for (const auto& f : factors_) {
    int e = f.exp;
    if (it != divisor.factors_.end() && it->var == f.var) {
      e -= it->exp;
      ++it;
    }
    if (e < 0) throw std::invalid_argument("Monomial: inexact division");
    if (e > 0) out.factors_.push_back({f.var, static_cast<std::uint16_t>(e)});
  }
  if (it != divisor.factors_.end()) throw std::invalid_argument("Monomial: inexact division");
  out.finish();
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->var < j->var)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->var < i->var) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.push_back({i->var, static_cast<std::uint16_t>(i->exp + j->exp)});
      ++i;
      ++j;
    }
  }
  out.finish();
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->var < j->var)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->var < i->var) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.push_back({i->var, std::max(i->exp, j->exp)});
      ++i;
      ++j;
    }
  }
  out.finish();
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  if ((mask_ & other.mask_) == 0) return true;
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() && j != other.factors_.end()) {
    if (i->var == j->var) return false;
    if (i->var < j->var) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

Monomial Monomial::relabel(const Permutation& w) const {
  Monomial out;
  for (const auto& f : factors_) {
    VarId v = VarId::from_code(f.var);
    VarId image(w(v.i()), w(v.j()));
    out.factors_.push_back({image.code(), f.exp});
  }
  std::sort(out.factors_.begin(), out.factors_.end());
  out.finish();
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += '*';
    out += VarId::from_code(f.var).to_string();
    if (f.exp > 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& f : factors_) {
    h ^= (static_cast<std::size_t>(f.var) << 16) | f.exp;
    h *= 1099511628211ull;
  }
  return h;
}

// ----------------------------------------------------------- MonomialOrder

MonomialOrder MonomialOrder::parse(std::string_view kind, std::string_view var_order) {
  Kind k;
  if (kind == "grevlex") {
    k = Kind::grevlex;
  } else if (kind == "grlex") {
    k = Kind::grlex;
  } else if (kind == "lex") {
    k = Kind::lex;
  } else {
    throw std::invalid_argument("unknown monomial order: " + std::string(kind));
  }
  bool reversed;
  if (var_order == "paper-example" || var_order == "default") {
    reversed = false;
  } else if (var_order == "reverse") {
    reversed = true;
  } else {
    throw std::invalid_argument("unknown variable order: " + std::string(var_order));
  }
  return {k, reversed};
}

std::string MonomialOrder::kind_name() const {
  switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::grlex: return "grlex";
    case Kind::lex: return "lex";
  }
  return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ != Kind::lex && a.degree() != b.degree()) return a.degree() <=> b.degree();

  // Walk both factor lists in ascending code order and record the first and
  // last codes at which the exponents differ.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.begin();
  auto j = fb.begin();
  bool found = false;
  int first_ea = 0, first_eb = 0, last_ea = 0, last_eb = 0;
  auto note = [&](int ea, int eb) {
    if (!found) {
      first_ea = ea;
      first_eb = eb;
      found = true;
    }
    last_ea = ea;
    last_eb = eb;
  };
  while (i != fa.end() || j != fb.end()) {
    if (j == fb.end() || (i != fa.end() && i->var < j->var)) {
      note(i->exp, 0);
      ++i;
    } else if (i == fa.end() || j->var < i->var) {
      note(0, j->exp);
      ++j;
    } else {
      if (i->exp != j->exp) note(i->exp, j->exp);
      ++i;
      ++j;
    }
  }
  if (!found) return std::strong_ordering::equal;

  // Higher code = larger variable unless reversed.
  const bool high_is_large = !reversed_;
  if (kind_ == Kind::grevlex) {
    // Smallest variable where they differ; smaller exponent wins.
    int ea = high_is_large ? first_ea : last_ea;
    int eb = high_is_large ? first_eb : last_eb;
    return eb <=> ea;
  }
  // Largest variable where they differ; larger exponent wins.
  int ea = high_is_large ? last_ea : first_ea;
  int eb = high_is_large ? last_eb : first_eb;
  return ea <=> eb;
}

// -------------------------------------------------------------------- Poly

namespace {

const MonomialOrder kCanonical = MonomialOrder::grevlex();

bool term_before(const Poly::Term& a, const Poly::Term& b) {
  return kCanonical.greater(a.first, b.first);
}

int infer_n(const std::vector<Poly::Term>& terms) {
  int n = 0;
  for (const auto& [m, c] : terms) {
    for (const auto& f : m.factors()) n = std::max(n, VarId::from_code(f.var).j());
  }
  return n;
}

}  // namespace

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_before);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      if (!merged.empty() && merged.back().second == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().second == 0) merged.pop_back();
  terms_ = std::move(merged);
  n_ = std::max(n_, infer_n(terms_));
}

Poly Poly::constant(int n, const Rational& c) {
  Poly p(n);
  if (c != 0) p.terms_.emplace_back(Monomial{}, c).second.canonicalize();
  return p;
}

Poly Poly::variable(int n, int i, int j) {
  VarId v(i, j);
  if (v.j() > n) throw std::invalid_argument("Poly::variable: index exceeds n");
  return from_monomial(n, Monomial::variable(v), 1);
}

Poly Poly::from_monomial(int n, const Monomial& m, const Rational& c) {
  Poly p(n);
  if (c != 0) p.terms_.emplace_back(m, c).second.canonicalize();
  p.n_ = std::max(n, infer_n(p.terms_));
  return p;
}

Poly Poly::from_terms(int n, std::vector<Term> terms) {
  Poly p(n);
  p.terms_ = std::move(terms);
  for (auto& t : p.terms_) t.second.canonicalize();
  p.normalize();
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.first.degree() == d; });
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_before);
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

const Poly::Term& Poly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::invalid_argument("leading_term of zero polynomial");
  if (order == kCanonical) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.greater(t.first, best->first)) best = &t;
  }
  return *best;
}

namespace {

std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                                    const Rational& sign) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && term_before(*i, *j))) {
      out.push_back(*i++);
    } else if (i == a.end() || term_before(*j, *i)) {
      out.emplace_back(j->first, sign * j->second);
      ++j;
    } else {
      Rational c = i->second + sign * j->second;
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  terms_ = merge_terms(terms_, o.terms_, Rational(1));
  n_ = std::max(n_, o.n_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  terms_ = merge_terms(terms_, o.terms_, Rational(-1));
  n_ = std::max(n_, o.n_);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    Rational k = c;
    k.canonicalize();
    for (auto& t : terms_) t.second *= k;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<Poly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) terms.emplace_back(ma * mb, ca * cb);
  }
  return Poly::from_terms(std::max(a.n_, b.n_), std::move(terms));
}

Poly operator*(const Poly& a, const Monomial& m) {
  // Multiplying by a monomial preserves the (multiplicative) term order.
  Poly out(a.n_);
  out.terms_.reserve(a.terms_.size());
  for (const auto& [ma, ca] : a.terms_) out.terms_.emplace_back(ma * m, ca);
  out.n_ = std::max(out.n_, infer_n(out.terms_));
  return out;
}

namespace {

template <typename T>
Rational evaluate_impl(const std::vector<Poly::Term>& terms, int n, std::span<const T> point) {
  if (static_cast<int>(point.size()) != num_vars(n)) {
    throw std::invalid_argument("evaluate: point has " + std::to_string(point.size()) +
                                " coordinates, expected " + std::to_string(num_vars(n)));
  }
  Rational total = 0;
  for (const auto& [m, c] : terms) {
    Rational value = c;
    for (const auto& f : m.factors()) {
      const auto& x = point[VarId::from_code(f.var).index(n)];
      for (int e = 0; e < f.exp; ++e) value *= x;
      if (value == 0) break;
    }
    total += value;
  }
  return total;
}

}  // namespace

Rational Poly::evaluate(std::span<const Rational> point) const {
  return evaluate_impl(terms_, n_, point);
}

Rational Poly::evaluate(std::span<const int> point) const {
  return evaluate_impl(terms_, n_, point);
}

Poly Poly::top_form() const {
  if (terms_.empty()) throw std::invalid_argument("top_form of zero polynomial");
  const int d = degree();
  Poly out(n_);
  for (const auto& t : terms_) {
    if (t.first.degree() == d) out.terms_.push_back(t);
  }
  return out;
}

Poly Poly::relabel(const Permutation& w) const {
  if (w.n() < n_) throw std::invalid_argument("relabel: permutation too small");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) terms.emplace_back(m.relabel(w), c);
  return from_terms(n_, std::move(terms));
}

Poly Poly::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  Rational lc = leading_term(order).second;
  Poly out = *this;
  if (lc != 1) out *= Rational(1) / lc;
  return out;
}

namespace {

std::string format_terms(const std::vector<Poly::Term>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << m.to_string();
    }
  }
  return out.str();
}

}  // namespace

std::string Poly::to_string() const { return format_terms(terms_); }

std::string Poly::to_string(const MonomialOrder& order) const {
  std::vector<Term> sorted = terms_;
  std::sort(sorted.begin(), sorted.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.first, b.first); });
  return format_terms(sorted);
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  std::vector<Poly::Term> run() {
    std::vector<Poly::Term> terms;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        if (s_[pos_] == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(term(sign));
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                                what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  int integer() {
    if (!digit()) fail("expected integer");
    int v = 0;
    while (digit()) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 100000) fail("integer too large");
    }
    return v;
  }

  Rational number() {
    std::size_t start = pos_;
    while (digit()) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      if (!digit()) fail("expected denominator");
      while (digit()) ++pos_;
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  Monomial factor() {
    if (pos_ >= s_.size() || s_[pos_] != 'x') fail("expected variable x{i,j}");
    ++pos_;
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '{') fail("expected '{'");
    ++pos_;
    skip();
    int i = integer();
    skip();
    if (pos_ >= s_.size() || s_[pos_] != ',') fail("expected ','");
    ++pos_;
    skip();
    int j = integer();
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '}') fail("expected '}'");
    ++pos_;
    int e = 1;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      e = integer();
    }
    return Monomial::variable(VarId(i, j), e);
  }

  Poly::Term term(int sign) {
    Rational c = sign;
    Monomial m;
    bool have_any = false;
    while (true) {
      skip();
      if (digit()) {
        c *= number();
      } else if (pos_ < s_.size() && s_[pos_] == 'x') {
        m = m * factor();
      } else {
        fail("expected coefficient or variable");
      }
      have_any = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_any) fail("empty term");
    return {m, c};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, int n) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "0") return Poly(n);
  auto terms = PolyParser(text).run();
  int inferred = infer_n(terms);
  if (n != 0 && inferred > n) throw std::invalid_argument("polynomial uses an index larger than n");
  return from_terms(std::max(n, inferred), std::move(terms));
}

}  // namespace orbh

#include "orbh/symfunc.hpp"

#include "orbh/sn_char.hpp"

#include <atomic>
#include <cctype>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace orbh {

namespace {

std::atomic<int> g_degree_cap{24};

using Matrix = std::vector<std::vector<Rational>>;
using PExpansion = std::map<Partition, Rational, PartitionOrder>;

// Transition data between one basis and p in a fixed degree:
//   b_lambda = sum_mu to_p[lambda][mu] p_mu,  p_mu = sum_lambda from_p[mu][lambda] b_lambda.
struct Transition {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  Matrix to_p;
  Matrix from_p;
};

Matrix invert(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("transition matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale = 1 / a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] *= scale;
      inv[col][k] *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational factor = a[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        if (a[col][k] != 0) a[row][k] -= factor * a[col][k];
        if (inv[col][k] != 0) inv[row][k] -= factor * inv[col][k];
      }
    }
  }
  return inv;
}

PExpansion p_product(const PExpansion& a, const PExpansion& b) {
  PExpansion out;
  for (const auto& [la, ca] : a) {
    for (const auto& [lb, cb] : b) {
      auto& slot = out[la.merged(lb)];
      slot += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// h_k (sign = false) or e_k (sign = true) in the p basis.
PExpansion hk_or_ek(int k, bool sign) {
  PExpansion out;
  for (const auto& nu : partitions_of(k)) {
    Rational c = Rational(1) / Rational(nu.z());
    if (sign && (k - nu.length()) % 2 != 0) c = -c;
    out[nu] = c;
  }
  return out;
}

// Number of ways to distribute the parts of mu over the rows of lambda so that
// row j receives total lambda_j: the coefficient of m_lambda in p_mu.
Rational p_to_m_coefficient(const Partition& mu, const Partition& lambda) {
  std::vector<int> room = lambda.vec();
  std::function<long long(int)> rec = [&](int i) -> long long {
    if (i == mu.length()) return 1;
    long long total = 0;
    for (auto& r : room) {
      if (r >= mu[i]) {
        r -= mu[i];
        total += rec(i + 1);
        r += mu[i];
      }
    }
    return total;
  };
  return Rational(static_cast<long>(rec(0)));
}

std::unique_ptr<Transition> build_transition(Basis basis, int n) {
  auto t = std::make_unique<Transition>();
  t->parts = partitions_of(n);
  const std::size_t size = t->parts.size();
  for (std::size_t i = 0; i < size; ++i) t->index.emplace(t->parts[i], static_cast<int>(i));
  auto idx = [&](const Partition& p) { return static_cast<std::size_t>(t->index.at(p)); };
  t->to_p.assign(size, std::vector<Rational>(size, 0));

  switch (basis) {
    case Basis::p:
      for (std::size_t i = 0; i < size; ++i) t->to_p[i][i] = 1;
      t->from_p = t->to_p;
      break;
    case Basis::s: {
      const auto& table = character_table(n);
      t->from_p.assign(size, std::vector<Rational>(size, 0));
      for (std::size_t l = 0; l < size; ++l) {
        for (std::size_t m = 0; m < size; ++m) {
          const auto chi = table.value(t->parts[l], t->parts[m]);
          t->to_p[l][m] = Rational(static_cast<long>(chi)) / Rational(t->parts[m].z());
          t->from_p[m][l] = Rational(static_cast<long>(chi));
        }
      }
      break;
    }
    case Basis::h:
    case Basis::e: {
      const bool sign = basis == Basis::e;
      for (std::size_t l = 0; l < size; ++l) {
        PExpansion acc{{Partition{}, Rational(1)}};
        for (int part : t->parts[l].parts()) acc = p_product(acc, hk_or_ek(part, sign));
        for (const auto& [mu, c] : acc) t->to_p[l][idx(mu)] = c;
      }
      t->from_p = invert(t->to_p);
      break;
    }
    case Basis::m: {
      Matrix p_to_m(size, std::vector<Rational>(size, 0));
      for (std::size_t m = 0; m < size; ++m) {
        for (std::size_t l = 0; l < size; ++l) {
          p_to_m[m][l] = p_to_m_coefficient(t->parts[m], t->parts[l]);
        }
      }
      t->from_p = p_to_m;
      t->to_p = invert(p_to_m);
      break;
    }
  }
  return t;
}

const Transition& transition(Basis basis, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<Transition>> cache;
  if (n > degree_cap()) {
    throw BudgetExceeded("symmetric function degree " + std::to_string(n) + " exceeds cap " +
                         std::to_string(degree_cap()));
  }
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({static_cast<int>(basis), n});
    if (it != cache.end()) return *it->second;
  }
  auto built = build_transition(basis, n);  // may take the character-table lock
  std::lock_guard lock(mutex);
  auto& slot = cache[{static_cast<int>(basis), n}];
  if (!slot) slot = std::move(built);
  return *slot;
}

SymFunc to_p(const SymFunc& f) {
  if (f.basis() == Basis::p) return f;
  SymFunc out(Basis::p);
  for (const auto& [lambda, coef] : f.terms()) {
    const auto& t = transition(f.basis(), lambda.size());
    const auto& row = t.to_p[static_cast<std::size_t>(t.index.at(lambda))];
    for (std::size_t m = 0; m < row.size(); ++m) {
      if (row[m] != 0) out.add_term(t.parts[m], coef * row[m]);
    }
  }
  return out;
}

SymFunc from_p(Basis target, const SymFunc& f) {
  if (target == Basis::p) return f;
  SymFunc out(target);
  for (const auto& [mu, coef] : f.terms()) {
    const auto& t = transition(target, mu.size());
    const auto& row = t.from_p[static_cast<std::size_t>(t.index.at(mu))];
    for (std::size_t l = 0; l < row.size(); ++l) {
      if (row[l] != 0) out.add_term(t.parts[l], coef * row[l]);
    }
  }
  return out;
}

SymFunc p_multiply(const SymFunc& a, const SymFunc& b) {
  SymFunc out(Basis::p);
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) out.add_term(la.merged(lb), ca * cb);
  }
  return out;
}

Rational as_rational(const QPoly& c) {
  if (!c.is_constant()) throw std::invalid_argument("q-dependent coefficient where a constant is required");
  return c.coefficient(0);
}

}  // namespace

char basis_letter(Basis b) {
  switch (b) {
    case Basis::m: return 'm';
    case Basis::h: return 'h';
    case Basis::e: return 'e';
    case Basis::p: return 'p';
    case Basis::s: return 's';
  }
  return '?';
}

Basis parse_basis(std::string_view text) {
  if (text == "m") return Basis::m;
  if (text == "h") return Basis::h;
  if (text == "e") return Basis::e;
  if (text == "p") return Basis::p;
  if (text == "s") return Basis::s;
  throw std::invalid_argument("unknown basis '" + std::string(text) + "'");
}

int degree_cap() { return g_degree_cap.load(); }
void set_degree_cap(int cap) {
  if (cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
  g_degree_cap.store(cap);
}

// ------------------------------------------------------------------ SymFunc

SymFunc SymFunc::single(Basis basis, const Partition& lambda, const QPoly& coef) {
  SymFunc f(basis);
  f.add_term(lambda, coef);
  return f;
}

QPoly SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QPoly() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const QPoly& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool SymFunc::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

int SymFunc::degree() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous()) throw std::logic_error("degree of an inhomogeneous symmetric function");
  return terms_.begin()->first.size();
}

bool SymFunc::is_q_free() const {
  for (const auto& [lambda, c] : terms_) {
    if (!c.is_constant()) return false;
  }
  return true;
}

SymFunc SymFunc::q_part(int d) const {
  SymFunc out(basis_);
  for (const auto& [lambda, c] : terms_) out.add_term(lambda, c.coefficient(d));
  return out;
}

SymFunc SymFunc::at_q_equal_one() const {
  SymFunc out(basis_);
  for (const auto& [lambda, c] : terms_) out.add_term(lambda, c.at_one());
  return out;
}

int SymFunc::q_degree() const {
  int d = -1;
  for (const auto& [lambda, c] : terms_) d = std::max(d, c.degree());
  return d;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  const SymFunc& other = o.basis_ == basis_ ? o : to_basis(basis_, o);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  const SymFunc& other = o.basis_ == basis_ ? o : to_basis(basis_, o);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const QPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, coef] : terms_) coef = coef * c;
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return *this;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return a.terms_ == to_basis(a.basis_, b).terms_;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [lambda, coef] : terms_) {
    std::string body = std::string(1, basis_letter(basis_)) + "[";
    for (int i = 0; i < lambda.length(); ++i) {
      if (i) body += ',';
      body += std::to_string(lambda[i]);
    }
    body += "]";
    const auto& cs = coef.coefficients();
    bool negative = false;
    std::string factor;
    if (cs.size() == 1) {
      const auto& [e, c] = *cs.begin();
      negative = c < 0;
      Rational mag = abs(c);
      if (mag != 1) factor += mag.get_str() + "*";
      if (e == 1) factor += "q*";
      if (e > 1) factor += "q^" + std::to_string(e) + "*";
    } else {
      factor = "(" + coef.to_string() + ")*";
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += factor + body;
  }
  return out;
}

SymFunc SymFunc::parse(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("SymFunc::parse: " + why + " at offset " + std::to_string(i));
  };
  skip();
  if (text.substr(i) == "0") return SymFunc(Basis::s);
  std::optional<SymFunc> result;
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    QPoly coef = 1;
    std::optional<std::pair<Basis, Partition>> label;
    while (true) {
      skip();
      if (i == text.size()) fail("unexpected end");
      char c = text[i];
      if (c == '(') {
        std::size_t close = text.find(')', i);
        if (close == std::string_view::npos) fail("unbalanced parenthesis");
        coef = coef * QPoly::parse(text.substr(i + 1, close - i - 1));
        i = close + 1;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
        coef = coef * QPoly(parse_rational(text.substr(start, i - start)));
      } else if (c == 'q') {
        ++i;
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          std::size_t start = i;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
          if (start == i) fail("missing exponent");
          e = std::stoi(std::string(text.substr(start, i - start)));
        }
        coef = coef * QPoly::monomial(e);
      } else if (std::string_view("mhepsMHEPS").find(c) != std::string_view::npos) {
        if (label) fail("two basis elements in one term");
        Basis b = parse_basis(std::string(1, static_cast<char>(std::tolower(c))));
        ++i;
        skip();
        if (i == text.size() || text[i] != '[') fail("expected '['");
        std::size_t close = text.find(']', i);
        if (close == std::string_view::npos) fail("unbalanced bracket");
        label.emplace(b, Partition::parse(text.substr(i + 1, close - i - 1)));
        i = close + 1;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!label) fail("term without a basis element");
    if (!result) result.emplace(label->first);
    if (result->basis() != label->first) fail("mixed bases in one expression");
    result->add_term(label->second, coef * Rational(sign));
  }
  if (!result) fail("empty expression");
  return *result;
}

namespace {

nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer in JSON");
}

}  // namespace

nlohmann::json SymFunc::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lambda, coef] : terms_) {
    nlohmann::json qpoly = nlohmann::json::array();
    for (const auto& [e, c] : coef.coefficients()) {
      qpoly.push_back({e, integer_json(c.get_num()), integer_json(c.get_den())});
    }
    terms.push_back({{"partition", lambda.vec()}, {"qpoly", qpoly}});
  }
  return {{"basis", std::string(1, basis_letter(basis_))}, {"terms", terms}};
}

SymFunc SymFunc::from_json(const nlohmann::json& j) {
  SymFunc f(parse_basis(j.at("basis").get<std::string>()));
  for (const auto& term : j.at("terms")) {
    Partition lambda(term.at("partition").get<std::vector<int>>());
    QPoly coef;
    for (const auto& entry : term.at("qpoly")) {
      Rational c(integer_from_json(entry.at(1)), integer_from_json(entry.at(2)));
      c.canonicalize();
      coef.add(entry.at(0).get<int>(), c);
    }
    f.add_term(lambda, coef);
  }
  return f;
}

// --------------------------------------------------------------- operations

SymFunc to_basis(Basis target, const SymFunc& f) {
  if (f.basis() == target) return f;
  return from_p(target, to_p(f));
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  return from_p(f.basis(), p_multiply(to_p(f), to_p(g)));
}

SymFunc pieri_multiply(const Partition& mu, int a) {
  SymFunc out(Basis::s);
  for (const auto& lambda : horizontal_strips(mu, a)) out.add_term(lambda, 1);
  return out;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
  if (!f.is_q_free() || !g.is_q_free()) {
    throw std::invalid_argument("plethysm: q-dependent arguments are not supported");
  }
  const SymFunc gp = to_p(g);
  if (!gp.coefficient(Partition{}).is_zero()) {
    throw std::invalid_argument("plethysm: inner function has a constant term");
  }
  const SymFunc fp = to_p(f);
  // p_k[g]: every index partition of g scaled by k.
  std::map<int, SymFunc> pk_of_g;
  auto power = [&](int k) -> const SymFunc& {
    auto it = pk_of_g.find(k);
    if (it != pk_of_g.end()) return it->second;
    SymFunc out(Basis::p);
    for (const auto& [nu, c] : gp.terms()) out.add_term(nu.scaled(k), c);
    return pk_of_g.emplace(k, std::move(out)).first->second;
  };
  SymFunc result(Basis::p);
  for (const auto& [mu, coef] : fp.terms()) {
    SymFunc term = SymFunc::p(Partition{});
    for (int part : mu.parts()) term = p_multiply(term, power(part));
    term *= QPoly(as_rational(coef));
    result += term;
  }
  return from_p(Basis::s, result);
}

SymFunc kronecker(const SymFunc& f, const SymFunc& g) {
  if (f.is_zero() || g.is_zero()) return SymFunc(Basis::s);
  if (f.degree() != g.degree()) throw std::invalid_argument("kronecker: degree mismatch");
  const SymFunc fp = to_p(f);
  const SymFunc gp = to_p(g);
  // p_mu * p_nu = delta_{mu,nu} z_mu p_mu.
  SymFunc out(Basis::p);
  for (const auto& [mu, cf] : fp.terms()) {
    QPoly cg = gp.coefficient(mu);
    if (cg.is_zero()) continue;
    out.add_term(mu, (cf * cg) * Rational(mu.z()));
  }
  return from_p(Basis::s, out);
}

SymFunc truncate(const SymFunc& f, const PartitionFilter& keep) {
  SymFunc s = to_basis(Basis::s, f);
  SymFunc out(Basis::s);
  for (const auto& [lambda, c] : s.terms()) {
    if (keep(lambda)) out.add_term(lambda, c);
  }
  return out;
}

SchurPositivity is_schur_positive(const SymFunc& f) {
  SymFunc s = to_basis(Basis::s, f);
  for (const auto& [lambda, c] : s.terms()) {
    if (auto e = c.first_negative()) {
      return {false, NegativeCoefficient{lambda, *e, c.coefficient(*e)}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace orbh

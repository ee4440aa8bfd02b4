#include "orbh/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbh {

namespace {

using Terms = std::vector<Poly::Term>;

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

using Accumulator = std::map<Monomial, Rational, Descending>;

void accumulate(Accumulator& acc, const Monomial& m, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

// A reducer is found through `find(m)`, which returns the monic generator's
// leading monomial and tail, or nulls.
struct ReducerRef {
  const Monomial* lead = nullptr;
  const Terms* tail = nullptr;
};

template <typename Find>
Terms reduce_fully(Accumulator acc, Find&& find) {
  Terms out;
  while (!acc.empty()) {
    auto it = acc.begin();
    ReducerRef r = find(it->first);
    if (r.lead == nullptr) {
      out.emplace_back(it->first, std::move(it->second));
      acc.erase(it);
      continue;
    }
    Monomial quotient = it->first / *r.lead;
    Rational c = std::move(it->second);
    acc.erase(it);
    for (const auto& [m, d] : *r.tail) accumulate(acc, quotient * m, -c * d);
  }
  return out;
}

Accumulator make_accumulator(const MonomialOrder& order) { return Accumulator(Descending{&order}); }

Terms sorted_terms(const Poly& p, const MonomialOrder& order) {
  Terms t = p.terms();
  std::sort(t.begin(), t.end(),
            [&](const Poly::Term& a, const Poly::Term& b) { return order.greater(a.first, b.first); });
  return t;
}

// Splits a nonzero polynomial (terms descending) into monic lead + tail.
std::pair<Monomial, Terms> split_monic(Terms terms) {
  Rational inv = Rational(1) / terms.front().second;
  Monomial lead = terms.front().first;
  Terms tail(std::make_move_iterator(terms.begin() + 1), std::make_move_iterator(terms.end()));
  if (inv != 1) {
    for (auto& t : tail) t.second *= inv;
  }
  return {std::move(lead), std::move(tail)};
}

Poly join(int n, const Monomial& lead, const Terms& tail) {
  Terms terms;
  terms.reserve(tail.size() + 1);
  terms.emplace_back(lead, 1);
  terms.insert(terms.end(), tail.begin(), tail.end());
  return Poly::from_terms(n, std::move(terms));
}

// Variables bucketed by the first factor of a leading monomial.
class LeadIndex {
 public:
  explicit LeadIndex(int n) : n_(n), buckets_(static_cast<std::size_t>(std::max(num_vars(n), 1))) {}

  void add(std::size_t id, const Monomial& lead) {
    if (lead.is_one()) {
      constant_ = id;
      return;
    }
    buckets_[VarId::from_code(lead.factors().front().var).index(n_)].push_back(id);
  }
  void remove(std::size_t id, const Monomial& lead) {
    if (lead.is_one()) {
      constant_.reset();
      return;
    }
    auto& b = buckets_[VarId::from_code(lead.factors().front().var).index(n_)];
    b.erase(std::remove(b.begin(), b.end(), id), b.end());
  }

  template <typename LeadOf>
  std::optional<std::size_t> find(const Monomial& m, LeadOf&& lead_of) const {
    if (constant_) return constant_;
    for (const auto& f : m.factors()) {
      const auto& b = buckets_[VarId::from_code(f.var).index(n_)];
      for (std::size_t id : b) {
        if (lead_of(id).divides(m)) return id;
      }
    }
    return std::nullopt;
  }

 private:
  int n_;
  std::vector<std::vector<std::size_t>> buckets_;
  std::optional<std::size_t> constant_;
};

int ring_size(std::span<const Poly> gens, int n) {
  for (const auto& g : gens) n = std::max(n, g.n());
  return n;
}

}  // namespace

// ------------------------------------------------------------ GroebnerBasis

GroebnerBasis::GroebnerBasis(int n, MonomialOrder order, std::vector<Poly> generators)
    : n_(n), order_(order) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    n_ = std::max(n_, g.n());
    generators_.push_back(g.monic(order_));
  }
  std::sort(generators_.begin(), generators_.end(), [&](const Poly& a, const Poly& b) {
    return order_.less(a.leading_term(order_).first, b.leading_term(order_).first);
  });
  index();
}

void GroebnerBasis::index() {
  leads_.clear();
  tails_.clear();
  by_first_var_.assign(static_cast<std::size_t>(std::max(num_vars(n_), 1)), {});
  constant_.reset();
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    auto [lead, tail] = split_monic(sorted_terms(generators_[k], order_));
    if (lead.is_one()) {
      if (!constant_) constant_ = k;
    } else {
      by_first_var_[VarId::from_code(lead.factors().front().var).index(n_)].push_back(k);
    }
    leads_.push_back(std::move(lead));
    tails_.push_back(std::move(tail));
  }
}

bool GroebnerBasis::is_unit_ideal() const { return constant_.has_value(); }

std::optional<std::size_t> GroebnerBasis::reducer(const Monomial& m) const {
  if (constant_) return constant_;
  for (const auto& f : m.factors()) {
    VarId v = VarId::from_code(f.var);
    if (v.j() > n_) continue;
    for (std::size_t k : by_first_var_[v.index(n_)]) {
      if (leads_[k].divides(m)) return k;
    }
  }
  return std::nullopt;
}

bool GroebnerBasis::in_initial_ideal(const Monomial& m) const { return reducer(m).has_value(); }

Poly GroebnerBasis::normal_form(const Poly& f) const {
  if (f.is_zero()) return Poly(std::max(n_, f.n()));
  if (constant_) return Poly(std::max(n_, f.n()));
  Accumulator acc = make_accumulator(order_);
  for (const auto& [m, c] : f.terms()) acc.emplace(m, c);
  Terms out = reduce_fully(std::move(acc), [&](const Monomial& m) -> ReducerRef {
    auto k = reducer(m);
    if (!k) return {};
    return {&leads_[*k], &tails_[*k]};
  });
  return Poly::from_terms(std::max(n_, f.n()), std::move(out));
}

Poly GroebnerBasis::normal_form(const Monomial& m) const {
  return normal_form(Poly::from_monomial(n_, m));
}

std::string GroebnerBasis::to_text() const {
  std::ostringstream out;
  out << "# groebner n=" << n_ << " order=" << order_.kind_name()
      << " var-order=" << order_.var_order_name() << '\n';
  for (const auto& g : generators_) out << g.to_string(order_) << '\n';
  return out.str();
}

GroebnerBasis GroebnerBasis::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::string kind, var_order = "paper-example";
  std::vector<Poly> gens;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.front() == '#') {
      std::istringstream words(line.substr(1));
      std::string word;
      words >> word;
      if (word != "groebner") continue;
      header = true;
      while (words >> word) {
        auto eq = word.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("groebner header: bad field " + word);
        std::string key = word.substr(0, eq), value = word.substr(eq + 1);
        if (key == "n") {
          n = std::stoi(value);
        } else if (key == "order") {
          kind = value;
        } else if (key == "var-order") {
          var_order = value;
        } else {
          throw std::invalid_argument("groebner header: unknown field " + key);
        }
      }
      continue;
    }
    if (!header) throw std::invalid_argument("groebner text: missing header");
    gens.push_back(Poly::parse(line, n));
  }
  if (!header || n < 0 || kind.empty()) throw std::invalid_argument("groebner text: incomplete header");
  return GroebnerBasis(n, MonomialOrder::parse(kind, var_order), std::move(gens));
}

// --------------------------------------------------------------- Buchberger

namespace {

struct Element {
  Monomial lead;
  Terms tail;
  bool active = true;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class BuchbergerRun {
 public:
  BuchbergerRun(int n, const MonomialOrder& order, const BuchbergerOptions& options)
      : n_(n), order_(order), options_(options), index_(n) {}

  void add_input(const Poly& f) {
    if (f.is_zero()) return;
    Accumulator acc = make_accumulator(order_);
    for (const auto& [m, c] : f.terms()) acc.emplace(m, c);
    Terms r = reduce(std::move(acc));
    if (!r.empty()) insert(std::move(r));
  }

  void run() {
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        if (auto c = order_.compare(a.lcm, b.lcm); c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair p = std::move(*best);
      *best = std::move(pairs_.back());
      pairs_.pop_back();
      if (++processed > options_.max_pairs) {
        throw BudgetExceeded("buchberger: more than " + std::to_string(options_.max_pairs) +
                             " S-pairs");
      }
      Terms r = reduce(s_polynomial(p));
      if (!r.empty()) insert(std::move(r));
    }
  }

  GroebnerBasis finish() {
    std::vector<Poly> gens;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      const auto& e = elems_[k];
      if (!e.active) continue;
      Accumulator acc = make_accumulator(order_);
      for (const auto& [m, c] : e.tail) acc.emplace(m, c);
      Terms tail = reduce(std::move(acc));
      gens.push_back(join(n_, e.lead, tail));
    }
    return GroebnerBasis(n_, order_, std::move(gens));
  }

 private:
  Accumulator s_polynomial(const Pair& p) const {
    const auto& a = elems_[p.i];
    const auto& b = elems_[p.j];
    Monomial ua = p.lcm / a.lead;
    Monomial ub = p.lcm / b.lead;
    Accumulator acc = make_accumulator(order_);
    for (const auto& [m, c] : a.tail) accumulate(acc, ua * m, c);
    for (const auto& [m, c] : b.tail) accumulate(acc, ub * m, -c);
    return acc;
  }

  Terms reduce(Accumulator acc) const {
    return reduce_fully(std::move(acc), [&](const Monomial& m) -> ReducerRef {
      auto k = index_.find(m, [&](std::size_t id) -> const Monomial& { return elems_[id].lead; });
      if (!k) return {};
      return {&elems_[*k].lead, &elems_[*k].tail};
    });
  }

  // Gebauer-Moeller update with the new element h.
  void insert(Terms r) {
    auto [lead, tail] = split_monic(std::move(r));
    const std::size_t h = elems_.size();
    elems_.push_back({std::move(lead), std::move(tail), true});
    const Monomial& lh = elems_[h].lead;

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < h; ++g) {
      if (!elems_[g].active) continue;
      cands.push_back({g, lh.lcm(elems_[g].lead), lh.coprime(elems_[g].lead)});
    }
    // Drop (h, g1) when a different (h, g2) has an lcm properly dividing it;
    // among equal lcms keep one, preferring a coprime pair.
    std::vector<bool> keep(cands.size(), false);
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (cands[k].coprime) {
        keep[k] = true;
        continue;
      }
      bool dominated = false;
      for (std::size_t l = 0; l < cands.size() && !dominated; ++l) {
        if (l == k) continue;
        const bool later_or_kept = l > k || keep[l];
        if (!later_or_kept) continue;
        if (cands[l].lcm.divides(cands[k].lcm)) dominated = true;
      }
      keep[k] = !dominated;
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + cands.size());
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm) && elems_[p.i].lead.lcm(lh) != p.lcm &&
          elems_[p.j].lead.lcm(lh) != p.lcm) {
        continue;
      }
      next.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (keep[k] && !cands[k].coprime) next.push_back({cands[k].g, h, std::move(cands[k].lcm)});
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < h; ++g) {
      if (elems_[g].active && lh.divides(elems_[g].lead)) {
        elems_[g].active = false;
        index_.remove(g, elems_[g].lead);
      }
    }
    index_.add(h, lh);
  }

  int n_;
  MonomialOrder order_;
  BuchbergerOptions options_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
  LeadIndex index_;
};

}  // namespace

GroebnerBasis buchberger(std::span<const Poly> gens, const MonomialOrder& order,
                         const BuchbergerOptions& options, int n) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  n = ring_size(gens, n);
  BuchbergerRun run(n, order, options);
  for (const auto& g : gens) run.add_input(g);
  run.run();
  return run.finish();
}

// ------------------------------------------------------- Buchberger-Moeller

namespace {

struct EchelonRow {
  std::size_t pivot;
  std::vector<std::pair<std::size_t, Rational>> entries;  // includes pivot with value 1
  std::vector<std::pair<std::size_t, Rational>> combo;    // over standard monomial indices
};

}  // namespace

GroebnerBasis ideal_of_points(int n, std::span<const std::vector<int>> points,
                              const MonomialOrder& order) {
  if (points.empty()) throw std::invalid_argument("ideal_of_points: empty point set");
  const int nv = num_vars(n);
  {
    std::set<std::vector<int>> seen;
    for (const auto& p : points) {
      if (static_cast<int>(p.size()) != nv) {
        throw std::invalid_argument("ideal_of_points: point of wrong dimension");
      }
      if (!seen.insert(p).second) throw std::invalid_argument("ideal_of_points: duplicate point");
    }
  }
  const std::size_t np = points.size();
  const std::vector<VarId> vars = all_vars(n);

  struct Origin {
    std::size_t parent;  // standard monomial index, or npos for 1
    int var;
  };
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  auto less = [&](const Monomial& a, const Monomial& b) { return order.less(a, b); };
  std::map<Monomial, Origin, decltype(less)> candidates(less);
  candidates.emplace(Monomial{}, Origin{npos, -1});

  std::vector<Monomial> standard;
  std::vector<std::vector<long long>> standard_eval;
  std::vector<EchelonRow> rows;
  std::vector<Poly> gens;
  std::vector<Monomial> leads;

  auto divisible_by_lead = [&](const Monomial& m) {
    return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };

  while (!candidates.empty()) {
    auto node = candidates.extract(candidates.begin());
    const Monomial t = node.key();
    const Origin origin = node.mapped();
    if (divisible_by_lead(t)) continue;

    std::vector<long long> raw(np);
    for (std::size_t k = 0; k < np; ++k) {
      raw[k] = origin.parent == npos ? 1 : standard_eval[origin.parent][k] * points[k][origin.var];
    }
    std::vector<Rational> v(np);
    for (std::size_t k = 0; k < np; ++k) v[k] = static_cast<long>(raw[k]);
    std::vector<Rational> combo(standard.size() + 1);  // last slot is t itself
    combo.back() = 1;
    for (const auto& row : rows) {
      if (v[row.pivot] == 0) continue;
      Rational c = v[row.pivot];
      for (const auto& [idx, val] : row.entries) v[idx] -= c * val;
      for (const auto& [idx, val] : row.combo) combo[idx] -= c * val;
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (nz == v.end()) {
      Terms terms;
      terms.emplace_back(t, 1);
      for (std::size_t s = 0; s < standard.size(); ++s) {
        if (combo[s] != 0) terms.emplace_back(standard[s], combo[s]);
      }
      gens.push_back(Poly::from_terms(n, std::move(terms)));
      leads.push_back(t);
      continue;
    }
    const std::size_t s = standard.size();
    const std::size_t pivot = static_cast<std::size_t>(nz - v.begin());
    Rational inv = Rational(1) / v[pivot];
    EchelonRow row;
    row.pivot = pivot;
    for (std::size_t k = 0; k < np; ++k) {
      if (v[k] != 0) row.entries.emplace_back(k, v[k] * inv);
    }
    for (std::size_t k = 0; k < s; ++k) {
      if (combo[k] != 0) row.combo.emplace_back(k, combo[k] * inv);
    }
    row.combo.emplace_back(s, combo.back() * inv);
    rows.push_back(std::move(row));
    standard.push_back(t);
    standard_eval.push_back(std::move(raw));
    for (int vi = 0; vi < nv; ++vi) {
      Monomial next = t * Monomial::variable(vars[vi]);
      if (candidates.count(next) || divisible_by_lead(next)) continue;
      candidates.emplace(std::move(next), Origin{s, vi});
    }
  }
  return GroebnerBasis(n, order, std::move(gens));
}

// ------------------------------------------------------------ gr, standard

GroebnerBasis associated_graded(const GroebnerBasis& g) {
  if (!g.order().is_graded()) {
    throw std::invalid_argument("associated_graded: needs a degree-compatible order");
  }
  std::vector<Poly> tops;
  tops.reserve(g.size());
  for (const auto& p : g.generators()) tops.push_back(p.top_form());
  return GroebnerBasis(g.n(), g.order(), std::move(tops));
}

std::size_t StandardMonomialSet::size() const {
  std::size_t total = 0;
  for (const auto& d : by_degree) total += d.size();
  return total;
}

std::vector<std::size_t> StandardMonomialSet::hilbert_function() const {
  std::vector<std::size_t> h;
  for (const auto& d : by_degree) h.push_back(d.size());
  return h;
}

std::vector<Monomial> StandardMonomialSet::all() const {
  std::vector<Monomial> out;
  for (const auto& d : by_degree) out.insert(out.end(), d.begin(), d.end());
  return out;
}

StandardMonomialSet standard_monomials(const GroebnerBasis& g, std::optional<int> max_degree,
                                       std::size_t cap) {
  StandardMonomialSet out;
  if (g.is_unit_ideal()) return out;
  const std::vector<VarId> vars = all_vars(g.n());
  if (!max_degree) {
    // Finite quotient iff every variable has a pure power among the leads.
    for (const auto& v : vars) {
      bool pure = false;
      for (const auto& lead : g.leading_monomials()) {
        if (lead.factors().size() == 1 && lead.factors()[0].var == v.code()) pure = true;
      }
      if (!pure) throw std::invalid_argument("standard_monomials: infinite quotient needs max_degree");
    }
  }
  std::vector<Monomial> level{Monomial{}};
  std::size_t total = 0;
  for (int d = 0; !level.empty(); ++d) {
    if (max_degree && d > *max_degree) break;
    std::sort(level.begin(), level.end(),
              [&](const Monomial& a, const Monomial& b) { return g.order().less(a, b); });
    total += level.size();
    if (total > cap) {
      throw BudgetExceeded("standard_monomials: more than " + std::to_string(cap) + " monomials");
    }
    std::set<Monomial> next;
    for (const auto& m : level) {
      for (const auto& v : vars) {
        Monomial up = m * Monomial::variable(v);
        if (!g.in_initial_ideal(up)) next.insert(std::move(up));
      }
    }
    out.by_degree.push_back(std::move(level));
    level.assign(next.begin(), next.end());
  }
  return out;
}

bool reduce_ideal_into(std::span<const Poly> a, const GroebnerBasis& b) {
  return !first_nonreducing(a, b).has_value();
}

std::optional<std::size_t> first_nonreducing(std::span<const Poly> a, const GroebnerBasis& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!b.normal_form(a[k]).is_zero()) return k;
  }
  return std::nullopt;
}

SPairReport check_s_pairs(const GroebnerBasis& g) {
  SPairReport report;
  const auto& leads = g.leading_monomials();
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (leads[i].coprime(leads[j])) continue;
      Monomial l = leads[i].lcm(leads[j]);
      Poly s = gens[i] * (l / leads[i]) - gens[j] * (l / leads[j]);
      ++report.pairs_checked;
      if (!g.normal_form(s).is_zero()) {
        report.ok = false;
        report.failing = {i, j};
        return report;
      }
    }
  }
  return report;
}

bool is_reduced(const GroebnerBasis& g) {
  const auto& leads = g.leading_monomials();
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Poly& p = g.generators()[k];
    if (p.leading_term(g.order()).second != 1) return false;
    for (const auto& [m, c] : p.terms()) {
      for (std::size_t l = 0; l < leads.size(); ++l) {
        if (m == leads[k] && l == k) continue;
        if (leads[l].divides(m)) return false;
      }
    }
  }
  return true;
}

}  // namespace orbh

#include "orbh/verify.hpp"

#include "orbh/loci.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbh {

using nlohmann::json;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    case Verdict::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

json CheckResult::to_json() const {
  json j = {{"id", id},
            {"params", params},
            {"verdict", verdict_name(verdict)},
            {"elapsed_seconds", elapsed_seconds},
            {"artifacts", artifacts}};
  if (witness) j["witness"] = *witness;
  if (!message.empty()) j["message"] = message;
  return j;
}

std::string CheckResult::summary() const {
  std::ostringstream out;
  out << id << " " << params.dump() << ": " << verdict_name(verdict) << " (" << std::fixed
      << std::setprecision(3) << elapsed_seconds << "s)";
  if (!message.empty()) out << " " << message;
  return out.str();
}

// ------------------------------------------------------------ closed forms

SymFunc formula_grfrob_2a(int a) {
  if (a < 1) throw std::invalid_argument("formula_grfrob_2a: a must be positive");
  SymFunc out(Basis::s);
  for (const auto& lambda : partitions_of(2 * a, [](const Partition& p) { return p.is_even(); })) {
    out.add_term(lambda, QPoly::monomial((2 * a - lambda.first_row()) / 2));
  }
  return out;
}

SymFunc formula_grfrob_a2(int a) {
  if (a < 1) throw std::invalid_argument("formula_grfrob_a2: a must be positive");
  SymFunc out(Basis::s);
  for (int d = 0; d <= a / 2; ++d) {
    out.add_term(Partition::from_unsorted({2 * a - 2 * d, 2 * d}), QPoly::monomial(d));
  }
  return out;
}

SymFunc formula_I(int n) {
  if (n < 1) throw std::invalid_argument("formula_I: n must be positive");
  auto tail_even = [](const Partition& p) {
    for (int i = 1; i < p.length(); ++i) {
      if (p[i] % 2 != 0) return false;
    }
    return true;
  };
  SymFunc out(Basis::s);
  for (const auto& lambda : partitions_of(n, tail_even)) {
    out.add_term(lambda, QPoly::monomial((n - lambda.first_row()) / 2));
  }
  return out;
}

SymFunc formula_J(int n) {
  if (n < 1) throw std::invalid_argument("formula_J: n must be positive");
  SymFunc out(Basis::s);
  for (int d = 0; d <= n / 4; ++d) {
    out.add_term(Partition::from_unsorted({n - 2 * d, 2 * d}), QPoly::monomial(d));
  }
  return out;
}

SymFunc formula_pinm_degree(int n, int m, int d) {
  if (m < 1 || m > n) throw std::invalid_argument("formula_pinm: need 1 <= m <= n");
  SymFunc out(Basis::s);
  for (const auto& lambda : partitions_of(n, [&](const Partition& p) {
         return p.first_row() <= m && p.length() == n - d;
       })) {
    SymFunc term = SymFunc::one();
    for (const auto& [b, a] : lambda.grouped()) {
      term = multiply(term, plethysm(SymFunc::h({a}), SymFunc::h({b})));
    }
    out += term;
  }
  return to_basis(Basis::s, out);
}

SymFunc formula_pinm(int n, int m) {
  SymFunc out(Basis::s);
  for (int d = 0; d < n; ++d) out += formula_pinm_degree(n, m, d) * QPoly::monomial(d);
  return out;
}

// ----------------------------------------------------------------- helpers

namespace {

template <typename Body>
CheckResult timed(std::string id, json params, Body&& body) {
  CheckResult r;
  r.id = std::move(id);
  r.params = std::move(params);
  auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::budget_exceeded;
    r.witness.reset();
    r.message = e.what();
  }
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void refute(CheckResult& r, json witness, std::string message) {
  r.verdict = Verdict::refuted;
  r.witness = std::move(witness);
  r.message = std::move(message);
}

// The first Schur coefficient (in canonical order) where the two differ.
std::optional<json> first_difference(const SymFunc& expected, const SymFunc& computed) {
  SymFunc diff = to_basis(Basis::s, computed) - to_basis(Basis::s, expected);
  SymFunc e = to_basis(Basis::s, expected);
  SymFunc c = to_basis(Basis::s, computed);
  for (const auto& [lambda, coef] : diff.terms()) {
    if (coef.is_zero()) continue;
    int k = coef.coefficients().begin()->first;
    return json{{"partition", lambda.to_string()},
                {"q_power", k},
                {"expected", e.coefficient(lambda).coefficient(k).get_str()},
                {"computed", c.coefficient(lambda).coefficient(k).get_str()}};
  }
  return std::nullopt;
}

void compare_series(CheckResult& r, const SymFunc& expected, const SymFunc& computed) {
  r.artifacts["expected"] = expected.to_string();
  r.artifacts["computed"] = computed.to_string();
  if (auto w = first_difference(expected, computed)) {
    refute(r, *w, "computed series differs from the closed form");
  }
}

json hilbert_json(const GradedModuleReport& rep) {
  json h = json::array();
  for (auto v : rep.hilbert_function()) h.push_back(v);
  return h;
}

GroebnerBasis tau_basis(const Locus& locus, const MonomialOrder& order = MonomialOrder::grevlex()) {
  return associated_graded(ideal_of_points(locus, order));
}

Partition rectangle(int rows, int part) { return Partition(std::vector<int>(static_cast<std::size_t>(rows), part)); }

}  // namespace

// ------------------------------------------------------------------ checks

CheckResult check_thm_grfrob_2a(int a) {
  return timed("grfrob-2a", {{"a", a}}, [&](CheckResult& r) {
    auto rep = graded_character(build_locus(rectangle(a, 2)));
    r.artifacts["hilbert"] = hilbert_json(rep);
    compare_series(r, formula_grfrob_2a(a), rep.grfrob);
  });
}

CheckResult check_thm_grfrob_a2(int a) {
  return timed("grfrob-a2", {{"a", a}}, [&](CheckResult& r) {
    auto rep = graded_character(build_locus(rectangle(2, a)));
    r.artifacts["hilbert"] = hilbert_json(rep);
    compare_series(r, formula_grfrob_a2(a), rep.grfrob);
  });
}

CheckResult check_thm_I(int n) {
  return timed("thm-I", {{"n", n}}, [&](CheckResult& r) {
    auto gens = gens_I(n);
    auto rep = graded_character_of_ideal(gens, n, MonomialOrder::grevlex(), {}, "I:n=" + std::to_string(n));
    r.artifacts["hilbert"] = hilbert_json(rep);
    compare_series(r, formula_I(n), rep.grfrob);
  });
}

CheckResult check_thm_J(int n) {
  return timed("thm-J", {{"n", n}}, [&](CheckResult& r) {
    auto gens = gens_J(n);
    auto rep = graded_character_of_ideal(gens, n, MonomialOrder::grevlex(), {}, "J:n=" + std::to_string(n));
    r.artifacts["hilbert"] = hilbert_json(rep);
    compare_series(r, formula_J(n), rep.grfrob);
  });
}

CheckResult check_thm_contain(int a, int b) {
  return timed("contain", {{"a", a}, {"b", b}}, [&](CheckResult& r) {
    if (a < b || b < 1) throw std::invalid_argument("contain: need a >= b >= 1");
    GroebnerBasis lower = tau_basis(build_locus(rectangle(a, b)));   // Pi_{(b^a)}
    GroebnerBasis upper = tau_basis(build_locus(rectangle(b, a)));   // Pi_{(a^b)}
    r.artifacts["generators_checked"] = lower.size();
    r.artifacts["target_basis_size"] = upper.size();
    if (auto k = first_nonreducing(lower.generators(), upper)) {
      const Poly& g = lower.generators()[*k];
      refute(r,
             {{"generator", g.to_string(lower.order())},
              {"normal_form", upper.normal_form(g).to_string(upper.order())}},
             "a generator does not reduce to zero");
    }
  });
}

CheckResult check_prop_pinm(int n, int m) {
  return timed("pinm", {{"n", n}, {"m", m}}, [&](CheckResult& r) {
    auto rep = graded_character(build_locus_pinm(n, m));
    r.artifacts["hilbert"] = hilbert_json(rep);
    json per_degree = json::array();
    int top = -1;
    for (int d = 0; d < n; ++d) {
      if (!formula_pinm_degree(n, m, d).is_zero()) top = d;
    }
    const int degrees = std::max(top + 1, static_cast<int>(rep.degrees.size()));
    for (int d = 0; d < degrees; ++d) {
      SymFunc expected = formula_pinm_degree(n, m, d);
      SymFunc computed = d < static_cast<int>(rep.degrees.size()) ? rep.degrees[d].frobenius
                                                                  : SymFunc(Basis::s);
      per_degree.push_back({{"d", d}, {"formula", expected.to_string()}, {"traces", computed.to_string()}});
      if (r.verdict == Verdict::verified) {
        if (auto w = first_difference(expected, computed)) {
          (*w)["degree"] = d;
          refute(r, *w, "degree " + std::to_string(d) + " differs from the product formula");
        }
      }
    }
    r.artifacts["degrees"] = per_degree;
  });
}

CheckResult check_thm_standard_monomials(int n, int m, const MonomialOrder& order) {
  json params = {{"n", n}, {"m", m}, {"order", order.kind_name()}, {"var_order", order.var_order_name()}};
  return timed("standard-monomials", params, [&](CheckResult& r) {
    Locus locus = build_locus_pinm(n, m);
    GroebnerBasis gr;
    if (order.is_graded()) {
      gr = tau_basis(locus, order);
    } else {
      GroebnerBasis graded = tau_basis(locus, MonomialOrder(MonomialOrder::Kind::grevlex, order.reversed()));
      gr = buchberger(graded.generators(), order, {}, n);
    }
    auto computed = standard_monomials(gr).all();
    std::set<Monomial> got(computed.begin(), computed.end());

    std::set<Monomial> predicted;
    bool all_stars = true;
    json basis = json::array();
    for (const auto& pi : set_partitions_max_block(n, m)) {
      Monomial prod;
      for (const auto& block : pi.blocks()) {
        auto tree = spanning_trees_min(block, order);
        for (const auto& [i, j] : tree) {
          if (i != block.front()) all_stars = false;
        }
        prod = prod * graph_monomial(tree);
      }
      basis.push_back({{"partition", pi.to_string()}, {"monomial", prod.to_string()}});
      predicted.insert(prod);
    }
    r.artifacts["basis"] = basis;
    r.artifacts["star_trees"] = all_stars;
    r.artifacts["count"] = got.size();
    for (const auto& mono : predicted) {
      if (!got.count(mono)) {
        refute(r, {{"monomial", mono.to_string()}, {"side", "predicted only"}},
               "predicted monomial is not standard");
        return;
      }
    }
    for (const auto& mono : got) {
      if (!predicted.count(mono)) {
        refute(r, {{"monomial", mono.to_string()}, {"side", "computed only"}},
               "standard monomial missing from the prediction");
        return;
      }
    }
  });
}

CheckResult check_generators(std::string_view family, int p1, int p2) {
  json params = {{"family", std::string(family)}};
  std::vector<Poly> gens;
  Locus locus;
  int n;
  if (family == "gr2a") {
    params["a"] = p1;
    n = 2 * p1;
    gens = gens_gr_pi_2a(p1);
    locus = build_locus(rectangle(p1, 2));
  } else if (family == "gra2") {
    params["a"] = p1;
    n = 2 * p1;
    gens = gens_gr_pi_a2(p1);
    locus = build_locus(rectangle(2, p1));
  } else if (family == "Inm") {
    params["n"] = p1;
    params["m"] = p2;
    n = p1;
    gens = gens_I_nm(p1, p2);
    locus = build_locus_pinm(p1, p2);
  } else {
    throw std::invalid_argument("check_generators: unknown family " + std::string(family));
  }
  return timed("generators", params, [&](CheckResult& r) {
    GroebnerBasis from_points = tau_basis(locus);
    GroebnerBasis from_gens = buchberger(gens, MonomialOrder::grevlex(), {}, n);
    r.artifacts["generator_count"] = gens.size();
    r.artifacts["basis_size"] = from_points.size();
    r.artifacts["bases_identical"] = from_points == from_gens;
    if (auto k = first_nonreducing(gens, from_points)) {
      refute(r,
             {{"direction", "generators into gr I"},
              {"polynomial", gens[*k].to_string()},
              {"normal_form", from_points.normal_form(gens[*k]).to_string()}},
             "a listed generator is not in gr I");
      return;
    }
    if (auto k = first_nonreducing(from_points.generators(), from_gens)) {
      const Poly& g = from_points.generators()[*k];
      refute(r,
             {{"direction", "gr I into generated ideal"},
              {"polynomial", g.to_string()},
              {"normal_form", from_gens.normal_form(g).to_string()}},
             "gr I is larger than the generated ideal");
    }
  });
}

LogConcavityFamily parse_family(std::string_view name) {
  if (name == "I") return LogConcavityFamily::I;
  if (name == "J") return LogConcavityFamily::J;
  if (name == "Pinm" || name == "pinm") return LogConcavityFamily::Pinm;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string family_name(LogConcavityFamily f) {
  switch (f) {
    case LogConcavityFamily::I: return "I";
    case LogConcavityFamily::J: return "J";
    case LogConcavityFamily::Pinm: return "Pinm";
  }
  return "?";
}

SymFunc family_grfrob(LogConcavityFamily f, int n, int m) {
  switch (f) {
    case LogConcavityFamily::I: return formula_I(n);
    case LogConcavityFamily::J: return formula_J(n);
    case LogConcavityFamily::Pinm: return formula_pinm(n, m);
  }
  throw std::invalid_argument("family_grfrob: bad family");
}

namespace {

// <Delta_d, s_lambda> recomputed from character values:
// sum_mu chi^lambda(mu) (F_d(mu)^2 - F_{d-1}(mu) F_{d+1}(mu)) / z_mu.
Rational recompute_coefficient(const SymFunc& lo, const SymFunc& mid, const SymFunc& hi,
                               const Partition& lambda) {
  const int n = lambda.size();
  const auto& table = character_table(n);
  auto value = [&](const SymFunc& f, const Partition& mu) {
    Rational v = 0;
    for (const auto& [nu, c] : f.terms()) v += c.coefficient(0) * Rational(table.value(nu, mu));
    return v;
  };
  Rational total = 0;
  for (const auto& mu : table.partitions()) {
    Rational fm = value(mid, mu);
    Rational term = fm * fm - value(lo, mu) * value(hi, mu);
    total += Rational(table.value(lambda, mu)) * term / Rational(mu.z());
  }
  return total;
}

}  // namespace

CheckResult check_log_concavity(LogConcavityFamily f, int n, int m, int kron_cap) {
  json params = {{"family", family_name(f)}, {"n", n}};
  if (f == LogConcavityFamily::Pinm) params["m"] = m;
  return timed("log-concavity", params, [&](CheckResult& r) {
    if (n > kron_cap) {
      throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the Kronecker cap " +
                           std::to_string(kron_cap));
    }
    SymFunc series = family_grfrob(f, n, m);
    const int top = series.q_degree();
    std::vector<SymFunc> parts;
    for (int d = 0; d <= top; ++d) parts.push_back(to_basis(Basis::s, series.q_part(d)));
    r.artifacts["series"] = series.to_string();
    r.artifacts["internal_degrees"] = std::max(top - 1, 0);
    json negatives = json::array();
    for (int d = 1; d < top; ++d) {
      SymFunc delta = kronecker(parts[d], parts[d]) - kronecker(parts[d - 1], parts[d + 1]);
      delta = to_basis(Basis::s, delta);
      for (const auto& [lambda, c] : delta.terms()) {
        Rational v = c.coefficient(0);
        if (v < 0) negatives.push_back({{"degree", d}, {"partition", lambda.to_string()}, {"coefficient", v.get_str()}});
      }
      auto pos = is_schur_positive(delta);
      if (!pos.positive && r.verdict == Verdict::verified) {
        const auto& w = *pos.witness;
        Rational fresh = recompute_coefficient(parts[d - 1], parts[d], parts[d + 1], w.lambda);
        if (fresh != w.coefficient) {
          throw std::logic_error("log-concavity witness did not re-verify: " + w.coefficient.get_str() +
                                 " vs " + fresh.get_str());
        }
        refute(r,
               {{"degree", d}, {"partition", w.lambda.to_string()}, {"coefficient", w.coefficient.get_str()},
                {"recomputed", fresh.get_str()}},
               "negative coefficient in F_d*F_d - F_{d-1}*F_{d+1} at d = " + std::to_string(d));
      }
    }
    r.artifacts["negative_coefficients"] = negatives;
  });
}

CheckResult check_lemma_plethysm(int n, int m) {
  return timed("plethysm", {{"n", n}, {"m", m}}, [&](CheckResult& r) {
    auto family = set_partitions_with_shape(rectangle(n, m));
    SymFunc computed = characteristic_map(permutation_character(family));
    SymFunc expected = plethysm(SymFunc::h({n}), SymFunc::h({m}));
    r.artifacts["points"] = family.size();
    compare_series(r, expected, computed);
  });
}

CheckResult check_lemma_row_length(int n, int j) {
  return timed("row-length", {{"n", n}, {"j", j}}, [&](CheckResult& r) {
    if (j < 1 || j > n) throw std::invalid_argument("row-length: need 1 <= j <= n");
    const auto& table = character_table(n);
    json rows = json::array();
    for (const auto& lambda : table.partitions()) {
      // Multiplicity of the trivial S_j-module in the restriction of V^lambda.
      Rational mult = 0;
      for (const auto& mu : partitions_of(j)) {
        std::vector<int> parts = mu.vec();
        parts.insert(parts.end(), static_cast<std::size_t>(n - j), 1);
        Partition full(parts);
        mult += Rational(table.value(lambda, full)) / Rational(mu.z());
      }
      const bool nonzero = mult != 0;
      const bool predicted = lambda.first_row() >= j;
      rows.push_back({{"lambda", lambda.to_string()}, {"trivial_multiplicity", mult.get_str()}});
      if (nonzero != predicted && r.verdict == Verdict::verified) {
        refute(r, {{"lambda", lambda.to_string()}, {"trivial_multiplicity", mult.get_str()}},
               "symmetrizer image does not follow the first-row criterion");
      }
    }
    r.artifacts["rows"] = rows;
  });
}

CheckResult check_lemma_annihilation(int n) {
  return timed("annihilation", {{"n", n}}, [&](CheckResult& r) {
    GroebnerBasis gb = buchberger(gens_I(n), MonomialOrder::grevlex(), {}, n);
    std::size_t instances = 0;
    for (int d = 0; 2 * d <= n; ++d) {
      for (const auto& tau : matchings(n, d)) {
        Monomial mono = matching_monomial(tau);
        for (int j = n - 2 * d + 1; j <= n; ++j) {
          ++instances;
          Poly image = symmetrizer_image(mono, j, gb);
          if (!image.is_zero()) {
            json pairs = json::array();
            for (const auto& [a, b] : tau.pairs()) pairs.push_back({a, b});
            refute(r, {{"matching", pairs}, {"j", j}, {"normal_form", image.to_string()}},
                   "symmetrizer image is not in I(n)");
            r.artifacts["instances"] = instances;
            return;
          }
        }
      }
    }
    r.artifacts["instances"] = instances;
  });
}

CheckResult check_cross_route(int a) {
  return timed("cross-route", {{"a", a}}, [&](CheckResult& r) {
    const int n = 2 * a;
    auto by_points_2a = graded_character(build_locus(rectangle(a, 2)));
    auto gi = gens_I(n);
    auto by_ideal_I = graded_character_of_ideal(gi, n);
    auto by_points_a2 = graded_character(build_locus(rectangle(2, a)));
    auto gj = gens_J(n);
    auto by_ideal_J = graded_character_of_ideal(gj, n);
    r.artifacts["pi_2a"] = by_points_2a.grfrob.to_string();
    r.artifacts["I"] = by_ideal_I.grfrob.to_string();
    r.artifacts["pi_a2"] = by_points_a2.grfrob.to_string();
    r.artifacts["J"] = by_ideal_J.grfrob.to_string();
    if (auto w = first_difference(by_points_2a.grfrob, by_ideal_I.grfrob)) {
      (*w)["pair"] = "Pi_(2^a) vs I(2a)";
      refute(r, *w, "locus and ideal routes disagree");
    } else if (auto w2 = first_difference(by_points_a2.grfrob, by_ideal_J.grfrob)) {
      (*w2)["pair"] = "Pi_(a^2) vs J(2a)";
      refute(r, *w2, "locus and ideal routes disagree");
    }
  });
}

// ---------------------------------------------------------------- dispatch

namespace {

int int_param(const json& params, const char* key) {
  if (!params.contains(key)) throw std::invalid_argument(std::string("missing parameter ") + key);
  const auto& v = params.at(key);
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) return std::stoi(v.get<std::string>());
  throw std::invalid_argument(std::string("parameter ") + key + " must be an integer");
}

std::string str_param(const json& params, const char* key, std::string fallback) {
  if (!params.contains(key)) return fallback;
  return params.at(key).get<std::string>();
}

}  // namespace

std::vector<std::string> check_ids() {
  return {"grfrob-2a", "grfrob-a2", "thm-I",    "thm-J",      "contain",      "pinm",       "standard-monomials",
          "generators", "log-concavity", "plethysm", "row-length", "annihilation", "cross-route"};
}

CheckResult run_check(std::string_view id, const json& params) {
  if (id == "grfrob-2a") return check_thm_grfrob_2a(int_param(params, "a"));
  if (id == "grfrob-a2") return check_thm_grfrob_a2(int_param(params, "a"));
  if (id == "thm-I") return check_thm_I(int_param(params, "n"));
  if (id == "thm-J") return check_thm_J(int_param(params, "n"));
  if (id == "contain") return check_thm_contain(int_param(params, "a"), int_param(params, "b"));
  if (id == "pinm") return check_prop_pinm(int_param(params, "n"), int_param(params, "m"));
  if (id == "standard-monomials") {
    auto order = MonomialOrder::parse(str_param(params, "order", "lex"),
                                      str_param(params, "var_order", "paper-example"));
    return check_thm_standard_monomials(int_param(params, "n"), int_param(params, "m"), order);
  }
  if (id == "generators") {
    std::string family = str_param(params, "family", "");
    if (family == "Inm") return check_generators(family, int_param(params, "n"), int_param(params, "m"));
    return check_generators(family, int_param(params, "a"));
  }
  if (id == "log-concavity") {
    auto family = parse_family(str_param(params, "family", ""));
    int m = family == LogConcavityFamily::Pinm ? int_param(params, "m") : 0;
    int cap = params.contains("kron_cap") ? int_param(params, "kron_cap") : 12;
    return check_log_concavity(family, int_param(params, "n"), m, cap);
  }
  if (id == "plethysm") return check_lemma_plethysm(int_param(params, "n"), int_param(params, "m"));
  if (id == "row-length") return check_lemma_row_length(int_param(params, "n"), int_param(params, "j"));
  if (id == "annihilation") return check_lemma_annihilation(int_param(params, "n"));
  if (id == "cross-route") return check_cross_route(int_param(params, "a"));
  throw std::invalid_argument("unknown check: " + std::string(id));
}

}  // namespace orbh

#pragma once

// Named checks with machine-readable verdicts, and the closed-form graded
// Frobenius series they compare against.

#include "orbh/orbit_harmonics.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbh {

enum class Verdict { verified, refuted, budget_exceeded };

std::string verdict_name(Verdict v);

struct CheckResult {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::verified;
  /// Present exactly when refuted.
  std::optional<nlohmann::json> witness;
  double elapsed_seconds = 0;
  nlohmann::json artifacts = nlohmann::json::object();
  std::string message;

  bool verified() const { return verdict == Verdict::verified; }
  nlohmann::json to_json() const;
  /// One line: "<id> <params>: <verdict> (<elapsed>s)".
  std::string summary() const;
};

// Closed forms.

/// sum over even lambda |- 2a of q^{(2a - lambda_1)/2} s_lambda.
SymFunc formula_grfrob_2a(int a);
/// sum_{d <= a/2} q^d s_{(2a-2d, 2d)}.
SymFunc formula_grfrob_a2(int a);
/// sum over lambda |- n with every part after the first even of
/// q^{(n - lambda_1)/2} s_lambda.
SymFunc formula_I(int n);
/// sum_{d <= n/4} q^d s_{(n-2d, 2d)}.
SymFunc formula_J(int n);
/// sum over lambda |- n with lambda_1 <= m and n - length = d of
/// prod h_{a_i}[h_{b_i}], lambda = (b_1^{a_1}, ...).
SymFunc formula_pinm_degree(int n, int m, int d);
SymFunc formula_pinm(int n, int m);

// Checks. Budget overruns come back as Verdict::budget_exceeded.

CheckResult check_thm_grfrob_2a(int a);
CheckResult check_thm_grfrob_a2(int a);
CheckResult check_thm_I(int n);
CheckResult check_thm_J(int n);
/// Every generator of the tau-basis of I(Pi_{(b^a)}) reduces to zero modulo
/// the basis of gr I(Pi_{(a^b)}). Requires a >= b.
CheckResult check_thm_contain(int a, int b);
/// Degree by degree: trace route against formula_pinm_degree.
CheckResult check_prop_pinm(int n, int m);
/// Standard monomials of gr I(Pi_{n,m}) under `order` against the products of
/// minimal spanning-tree monomials over the blocks.
CheckResult check_thm_standard_monomials(int n, int m, const MonomialOrder& order);
/// Mutual normal-form reduction between an explicit generator family and the
/// tau-basis of its locus. family: "gr2a" (a), "gra2" (a), "Inm" (n, m).
CheckResult check_generators(std::string_view family, int p1, int p2 = 0);

enum class LogConcavityFamily { I, J, Pinm };
LogConcavityFamily parse_family(std::string_view name);
std::string family_name(LogConcavityFamily f);
/// Closed-form series for the family.
SymFunc family_grfrob(LogConcavityFamily f, int n, int m = 0);
/// F_d * F_d - F_{d-1} * F_{d+1} (Kronecker products) Schur-positive for every
/// internal degree d. n above kron_cap is budget_exceeded.
CheckResult check_log_concavity(LogConcavityFamily f, int n, int m = 0, int kron_cap = 12);

/// Characteristic of the permutation module C[Pi_{(m^n)}] against h_n[h_m].
CheckResult check_lemma_plethysm(int n, int m);
/// For every lambda |- n: the trivial S_j-isotypic part of V^lambda is nonzero
/// iff lambda_1 >= j.
CheckResult check_lemma_row_length(int n, int j);
/// NF(eta_j m(tau), GB of I(n)) = 0 for every d-matching tau and j > n - 2d.
CheckResult check_lemma_annihilation(int n);
/// graded_character(Pi_{(2^a)}) = graded_character_of_ideal(I(2a)) and the
/// same for Pi_{(a^2)} and J(2a).
CheckResult check_cross_route(int a);

/// Runs a check by name with JSON parameters (used by the command line).
/// Known ids: grfrob-2a, grfrob-a2, thm-I, thm-J, contain, pinm,
/// standard-monomials, generators, log-concavity, plethysm, row-length,
/// annihilation, cross-route.
CheckResult run_check(std::string_view id, const nlohmann::json& params);
std::vector<std::string> check_ids();

}  // namespace orbh

#pragma once

// Explicit generator families and the matching, graph and forest monomials
// attached to set-partition loci.

#include "orbh/combinatorics.hpp"
#include "orbh/polyring.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbh {

/// Products x_S * x_T over 2-subsets of [2a] with S and T meeting (squares
/// included), then the 2a vertex sums sum_{j != i} x_{i,j}.
std::vector<Poly> gens_gr_pi_2a(int a);
/// gens_gr_pi_2a(a) followed by the exchange differences.
std::vector<Poly> gens_gr_pi_a2(int a);

/// Same families on [n] for any n >= 1.
std::vector<Poly> gens_I(int n);
std::vector<Poly> gens_J(int n);

/// The three differences x_{ab}x_{cd} - x_{ac}x_{bd}, x_{ab}x_{cd} - x_{ad}x_{bc},
/// x_{ac}x_{bd} - x_{ad}x_{bc} for each 4-subset a < b < c < d.
std::vector<Poly> exchange_differences(int n);

/// Squares, the path differences x_{i,j}x_{j,k} - x_{i,k}x_{j,k}, and tree
/// monomials on every (m+1)-subset. BudgetExceeded when the tree family
/// exceeds tree_cap.
std::vector<Poly> gens_I_nm(int n, int m, std::size_t tree_cap = 2'000'000);

Monomial matching_monomial(const Matching& tau);
/// Pairs consecutive elements of the sorted subset; rejects odd sizes.
Monomial standard_matching_monomial(std::span<const int> subset);
Monomial graph_monomial(std::span<const Edge> edges);
Monomial graph_monomial(const Forest& f);

/// The tree on `block` whose graph monomial is smallest under `order`.
std::vector<Edge> spanning_trees_min(std::span<const int> block, const MonomialOrder& order);

using ForestChooser = std::function<Forest(const SetPartition&)>;

/// Star at the block minimum on every block.
ForestChooser star_chooser();
/// Path through each block in increasing order.
ForestChooser path_chooser();
/// spanning_trees_min on each block.
ForestChooser min_tree_chooser(const MonomialOrder& order);

/// One graph monomial per set partition of Pi_{n,m}. Rejects choosers whose
/// forest has the wrong component partition.
std::vector<std::pair<SetPartition, Monomial>> forest_basis(int n, int m,
                                                            const ForestChooser& chooser);

struct IdealPreset {
  std::string name;  // gr2a, gra2, I, J, Inm
  int n = 0;
  std::map<std::string, int> params;
  std::vector<Poly> generators;
  std::string to_string() const;
};

/// "gr2a:a=3", "gra2:a=3", "I:n=7", "J:n=7", "Inm:n=5,m=3".
IdealPreset parse_preset(std::string_view spec);

}  // namespace orbh

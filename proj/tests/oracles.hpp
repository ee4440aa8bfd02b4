#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the library algorithms they are checking.

#include "orbh/combinatorics.hpp"
#include "orbh/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using orbh::Partition;
using orbh::Rational;

/// chi^lambda(mu) as the coefficient of x^{lambda + delta} in a_delta * p_mu.
std::int64_t frobenius_character(const Partition& lambda, const Partition& mu);

/// Number of semistandard tableaux of shape lambda and content mu.
std::int64_t kostka(const Partition& lambda, const Partition& mu);

/// Character table from permutation modules M^mu and the Kostka matrix.
/// table[lambda][mu], partitions of n.
std::map<Partition, std::map<Partition, std::int64_t>> permutation_module_table(int n);

/// Set partitions of [n] with the given block shape, counted by canonicalizing
/// every map [n] -> [n].
std::map<Partition, std::int64_t> set_partition_shape_counts(int n);
std::int64_t bell(int n);
std::int64_t double_factorial_odd(int a);  // (2a - 1)!!

/// Connected components of a graph on [n], as sorted blocks ordered by minimum.
std::vector<std::vector<int>> components(int n, const std::vector<orbh::Edge>& edges);

/// Rank of x -> eta_j x e_T on the group algebra of S_n, e_T the Young
/// symmetrizer of the row-reading tableau of lambda. Equals dim eta_j V^lambda.
int symmetrizer_rank(const Partition& lambda, int j);

/// Per-degree multiplicities of irreducibles in the graded module attached to
/// a 0/1 point set, through the filtration by polynomial degree of functions
/// on the points. result[d][lambda] = multiplicity in degree d.
struct LocusOracle {
  std::vector<std::size_t> hilbert;
  std::vector<std::map<Partition, Rational>> multiplicities;
};
LocusOracle graded_module(int n, const std::vector<std::vector<int>>& points, int max_degree);

}  // namespace oracle

#pragma once

// Irreducible characters of S_n and the Frobenius characteristic map.

#include "orbh/combinatorics.hpp"
#include "orbh/symfunc.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace orbh {

class CharacterTable {
 public:
  /// Builds the full table by the Murnaghan-Nakayama rule.
  explicit CharacterTable(int n);

  int n() const { return n_; }
  /// Partitions of n in canonical order; rows and columns share this indexing.
  const std::vector<Partition>& partitions() const { return partitions_; }
  int index(const Partition& lambda) const;
  /// chi^lambda evaluated on the class of cycle type mu.
  std::int64_t value(const Partition& lambda, const Partition& mu) const;
  std::int64_t value(int row, int col) const { return values_[row][col]; }
  /// dim V^lambda = chi^lambda(1^n).
  std::int64_t dim(const Partition& lambda) const;
  /// Rows lambda, columns mu, both in canonical order.
  std::string to_csv() const;

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::map<Partition, int> index_;
  std::vector<std::vector<std::int64_t>> values_;
};

/// Shared, lazily built table. Throws BudgetExceeded above degree_cap().
const CharacterTable& character_table(int n);

/// Single Murnaghan-Nakayama evaluation without building a table.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

struct ClassFunction {
  int n = 0;
  std::map<Partition, Rational, PartitionOrder> values;

  Rational at(const Partition& mu) const;
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

/// Class function of an irreducible character.
ClassFunction irreducible_character(const Partition& lambda);

/// ch(f) = sum_mu f(mu) / z_mu p_mu, returned in the Schur basis. Requires f
/// on every mu |- n.
SymFunc characteristic_map(const ClassFunction& f);

/// f(mu) = number of points fixed by the class representative of mu.
ClassFunction permutation_character(int n,
                                    const std::function<Integer(const Permutation&)>& fixed_points);

/// Permutation character of S_n relabeling a family of set partitions of [n].
ClassFunction permutation_character(std::span<const SetPartition> family);

/// True when w maps the set partition to itself.
bool fixes(const Permutation& w, const SetPartition& pi);

}  // namespace orbh

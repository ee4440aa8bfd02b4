#pragma once

// Integer partitions, set partitions, matchings, forests and permutations on
// [n] = {1, ..., n}. Elements of [n] are 1-based throughout the public API.

#include "orbh/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbh {

class Partition {
 public:
  Partition() = default;
  /// Parts must be positive and weakly decreasing; throws otherwise.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zero entries before validating.
  static Partition from_unsorted(std::vector<int> parts);
  /// Parses "5^3,2^3,1"; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); zero past the end.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  int first_row() const { return empty() ? 0 : parts_.front(); }

  bool is_even() const;
  /// m_i(lambda), the number of parts equal to i.
  int multiplicity(int i) const;
  Partition conjugate() const;
  bool contains(const Partition& mu) const;
  /// z_lambda = prod_i i^{m_i} m_i!.
  Integer z() const;
  /// (b_1^{a_1}, ..., b_r^{a_r}) with b_1 > ... > b_r as (b, a) pairs.
  std::vector<std::pair<int, int>> grouped() const;

  /// Parts concatenated and re-sorted.
  Partition merged(const Partition& other) const;
  /// Every part multiplied by k.
  Partition scaled(int k) const;

  /// Exponent form, e.g. "5^3,2^3,1".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Plain lexicographic order on the part sequences.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical order: by size, then decreasing lexicographic ((4) before (3,1)).
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;
  }
};

using PartitionFilter = std::function<bool(const Partition&)>;

/// All partitions of n in decreasing lexicographic order, optionally filtered.
std::vector<Partition> partitions_of(int n, const PartitionFilter& filter = {});

/// All lambda containing mu with lambda/mu a horizontal strip of size a.
std::vector<Partition> horizontal_strips(const Partition& mu, int a,
                                         std::optional<int> cap = std::nullopt);

class SetPartition {
 public:
  SetPartition() = default;
  /// Blocks are canonicalized: elements ascending, blocks ordered by minimum.
  SetPartition(int n, std::vector<std::vector<int>> blocks);
  /// From a restricted-growth labelling: label[i] is the block of element i+1.
  static SetPartition from_labels(std::span<const int> labels);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  Partition shape() const;
  /// 0-based index of the block containing element i (1-based).
  int block_of(int i) const { return label_[i - 1]; }
  bool same_block(int i, int j) const { return label_[i - 1] == label_[j - 1]; }
  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> label_;
};

/// Pi_lambda: set partitions of [|lambda|] with block sizes lambda, sorted.
std::vector<SetPartition> set_partitions_with_shape(const Partition& lambda);

/// Pi_{n,m}: set partitions of [n] without blocks larger than m, sorted.
/// Rejects m = 0 when n > 0.
std::vector<SetPartition> set_partitions_max_block(int n, int m);

/// Streams Pi_{n,m} in restricted-growth-string order without materializing it.
void for_each_set_partition(int n, int m, const std::function<void(const SetPartition&)>& visit);

using Edge = std::pair<int, int>;

/// Canonical 2-subset {i, j} with i < j.
inline Edge make_edge(int i, int j) { return i < j ? Edge{i, j} : Edge{j, i}; }

class Matching {
 public:
  Matching() = default;
  Matching(int n, std::vector<Edge> pairs);
  int n() const { return n_; }
  const std::vector<Edge>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  /// Union of the pairs, ascending.
  std::vector<int> support() const;
  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> pairs_;
};

/// M_{n,d}: all d-matchings on [n].
std::vector<Matching> matchings(int n, int d);

class Forest {
 public:
  Forest() = default;
  /// Throws std::invalid_argument if the edges contain a cycle.
  Forest(int n, std::vector<Edge> edges);
  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// The set partition of [n] into connected components.
  SetPartition components() const;
  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Edge sets of all labeled trees on the vertex set `vertices`
/// (|V|^{|V|-2} of them), enumerated through Pruefer sequences.
std::vector<std::vector<Edge>> labeled_trees(std::span<const int> vertices);

/// The tree on `vertices` that is minimal for `less`, a strict order on edge sets.
std::vector<Edge> spanning_tree_min(
    std::span<const int> vertices,
    const std::function<bool(const std::vector<Edge>&, const std::vector<Edge>&)>& less);

class Permutation {
 public:
  Permutation() = default;
  /// images[i] = w(i + 1), 1-based values.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// Canonical representative of a cycle type: cycles filled with consecutive
  /// integers, longest cycles first.
  static Permutation from_cycle_type(const Partition& mu);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  Partition cycle_type() const;
  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Calls visit on each permutation of [n] in lexicographic order of images.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

struct ConjugacyClass {
  Partition cycle_type;
  Permutation representative;
  Integer size;        // n! / z
  Integer centralizer; // z
};

/// One entry per partition of n, in canonical partition order.
std::vector<ConjugacyClass> conjugacy_class_data(int n);

}  // namespace orbh

#include "orbh/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbh {

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  while (!text.empty() && (text.front() == ' ' || text.front() == '(')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == ')')) text.remove_suffix(1);
  if (text.empty()) return {};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    std::size_t caret = token.find('^');
    int part = parse_int(token.substr(0, caret));
    int reps = caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1));
    if (reps < 0) throw std::invalid_argument("negative repeat count");
    parts.insert(parts.end(), reps, part);
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

bool Partition::is_even() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::conjugate() const {
  std::vector<int> conj(first_row(), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) ++conj[c];
  }
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i) {
    if (mu.parts_[i] > parts_[i]) return false;
  }
  return true;
}

Integer Partition::z() const {
  Integer z = 1;
  for (auto [part, mult] : grouped()) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part),
                  static_cast<unsigned long>(mult));
    z *= power * factorial(mult);
  }
  return z;
}

std::vector<std::pair<int, int>> Partition::grouped() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::scaled(int k) const {
  std::vector<int> parts = parts_;
  for (int& p : parts) p *= k;
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (auto [part, mult] : grouped()) {
    if (!out.empty()) out += ',';
    out += std::to_string(part);
    if (mult > 1) out += '^' + std::to_string(mult);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out, const PartitionFilter& filter) {
  if (remaining == 0) {
    Partition p(current);
    if (!filter || filter(p)) out.push_back(std::move(p));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out, filter);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, const PartitionFilter& filter) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out, filter);
  return out;
}

std::vector<Partition> horizontal_strips(const Partition& mu, int a, std::optional<int> cap) {
  if (a < 0) throw std::invalid_argument("horizontal_strips: a must be nonnegative");
  std::vector<Partition> out;
  const int rows = mu.length() + 1;
  std::vector<int> lambda(rows, 0);
  // Row i ranges over [mu_i, mu_{i-1}] (row 0 is unbounded above).
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == rows) {
      if (left == 0) out.push_back(Partition::from_unsorted(lambda));
      return;
    }
    int lo = mu[row];
    int hi = row == 0 ? mu[0] + left : std::min(mu[row - 1], mu[row] + left);
    if (row == 0 && cap) hi = std::min(hi, *cap);
    for (int v = hi; v >= lo; --v) {
      lambda[row] = v;
      rec(row + 1, left - (v - lo));
    }
  };
  rec(0, a);
  return out;
}

// ------------------------------------------------------------- SetPartition

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)), label_(n, -1) {
  if (n < 0) throw std::invalid_argument("SetPartition: negative n");
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (int e : blocks_[k]) {
      if (e < 1 || e > n) throw std::invalid_argument("SetPartition: element outside [n]");
      if (label_[e - 1] != -1) throw std::invalid_argument("SetPartition: blocks overlap");
      label_[e - 1] = static_cast<int>(k);
    }
  }
  if (std::find(label_.begin(), label_.end(), -1) != label_.end()) {
    throw std::invalid_argument("SetPartition: blocks do not cover [n]");
  }
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<int>> blocks(count);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    blocks[labels[i]].push_back(static_cast<int>(i) + 1);
  }
  return SetPartition(static_cast<int>(labels.size()), std::move(blocks));
}

Partition SetPartition::shape() const {
  std::vector<int> sizes;
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return Partition::from_unsorted(std::move(sizes));
}

std::string SetPartition::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) out += ',';
    out += '{';
    for (std::size_t i = 0; i < blocks_[k].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks_[k][i]);
    }
    out += '}';
  }
  return out + "}";
}

std::vector<SetPartition> set_partitions_with_shape(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<SetPartition> out;
  std::vector<int> sizes = lambda.vec();  // remaining block sizes, decreasing
  std::vector<bool> used(n + 1, false);
  std::vector<std::vector<int>> blocks;

  std::function<void()> place_next;
  // Fill `block` up to `target` elements choosing from elements > `after`.
  std::function<void(std::vector<int>&, int, int)> fill = [&](std::vector<int>& block, int target,
                                                              int after) {
    if (static_cast<int>(block.size()) == target) {
      blocks.push_back(block);
      place_next();
      blocks.pop_back();
      return;
    }
    for (int e = after + 1; e <= n; ++e) {
      if (used[e]) continue;
      used[e] = true;
      block.push_back(e);
      fill(block, target, e);
      block.pop_back();
      used[e] = false;
    }
  };
  place_next = [&]() {
    int first = 1;
    while (first <= n && used[first]) ++first;
    if (first > n) {
      out.emplace_back(n, blocks);
      return;
    }
    // The smallest free element opens a block; try each distinct size.
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      if (k > 0 && sizes[k] == sizes[k - 1]) continue;
      int size = sizes[k];
      sizes.erase(sizes.begin() + static_cast<long>(k));
      used[first] = true;
      std::vector<int> block{first};
      fill(block, size, first);
      used[first] = false;
      sizes.insert(sizes.begin() + static_cast<long>(k), size);
    }
  };
  place_next();
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_set_partition(int n, int m, const std::function<void(const SetPartition&)>& visit) {
  if (n < 0 || m < 0) throw std::invalid_argument("for_each_set_partition: negative argument");
  if (m == 0 && n > 0) throw std::invalid_argument("Pi_{n,0} is empty for n > 0");
  std::vector<int> labels(n, 0);
  std::vector<int> counts;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      visit(SetPartition::from_labels(labels));
      return;
    }
    const int blocks = static_cast<int>(counts.size());
    for (int b = 0; b < blocks; ++b) {
      if (counts[b] >= m) continue;
      labels[i] = b;
      ++counts[b];
      rec(i + 1);
      --counts[b];
    }
    labels[i] = blocks;
    counts.push_back(1);
    rec(i + 1);
    counts.pop_back();
  };
  rec(0);
}

std::vector<SetPartition> set_partitions_max_block(int n, int m) {
  if (m > n && n > 0) m = n;
  std::vector<SetPartition> out;
  for_each_set_partition(n, m, [&](const SetPartition& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

// ----------------------------------------------------------------- Matching

Matching::Matching(int n, std::vector<Edge> pairs) : n_(n), pairs_(std::move(pairs)) {
  std::vector<bool> seen(n + 1, false);
  for (auto& e : pairs_) {
    e = make_edge(e.first, e.second);
    if (e.first < 1 || e.second > n || e.first == e.second) {
      throw std::invalid_argument("Matching: invalid pair");
    }
    if (seen[e.first] || seen[e.second]) throw std::invalid_argument("Matching: pairs overlap");
    seen[e.first] = seen[e.second] = true;
  }
  std::sort(pairs_.begin(), pairs_.end());
}

std::vector<int> Matching::support() const {
  std::vector<int> s;
  for (auto [i, j] : pairs_) {
    s.push_back(i);
    s.push_back(j);
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<Matching> matchings(int n, int d) {
  std::vector<Matching> out;
  if (d < 0 || 2 * d > n) return out;
  std::vector<bool> used(n + 1, false);
  std::vector<Edge> pairs;
  std::function<void(int, int)> rec = [&](int from, int left) {
    if (left == 0) {
      out.emplace_back(n, pairs);
      return;
    }
    for (int i = from; i <= n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      for (int j = i + 1; j <= n; ++j) {
        if (used[j]) continue;
        used[j] = true;
        pairs.emplace_back(i, j);
        rec(i + 1, left - 1);
        pairs.pop_back();
        used[j] = false;
      }
      used[i] = false;
    }
  };
  rec(1, d);
  return out;
}

// ------------------------------------------------------------------- Forest

Forest::Forest(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  UnionFind uf(n + 1);
  for (auto& e : edges_) {
    e = make_edge(e.first, e.second);
    if (e.first < 1 || e.second > n || e.first == e.second) {
      throw std::invalid_argument("Forest: invalid edge");
    }
    if (!uf.unite(e.first, e.second)) throw std::invalid_argument("Forest: edges contain a cycle");
  }
  std::sort(edges_.begin(), edges_.end());
}

SetPartition Forest::components() const {
  UnionFind uf(n_ + 1);
  for (auto [i, j] : edges_) uf.unite(i, j);
  std::vector<std::vector<int>> blocks;
  std::vector<int> index(n_ + 1, -1);
  for (int v = 1; v <= n_; ++v) {
    int root = uf.find(v);
    if (index[root] == -1) {
      index[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[index[root]].push_back(v);
  }
  return SetPartition(n_, std::move(blocks));
}

std::vector<std::vector<Edge>> labeled_trees(std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  std::vector<std::vector<Edge>> out;
  if (k == 0) return out;
  if (k == 1) {
    out.emplace_back();
    return out;
  }
  std::vector<int> seq(std::max(k - 2, 0), 0);
  while (true) {
    // Decode the Pruefer sequence over vertex indices 0..k-1.
    std::vector<int> degree(k, 1);
    for (int s : seq) ++degree[s];
    std::vector<Edge> edges;
    for (int s : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back(make_edge(vertices[leaf], vertices[s]));
      --degree[leaf];
      --degree[s];
    }
    int u = -1;
    for (int v = 0; v < k; ++v) {
      if (degree[v] == 1) {
        if (u == -1) {
          u = v;
        } else {
          edges.push_back(make_edge(vertices[u], vertices[v]));
          break;
        }
      }
    }
    std::sort(edges.begin(), edges.end());
    out.push_back(std::move(edges));
    int pos = static_cast<int>(seq.size()) - 1;
    while (pos >= 0 && seq[pos] == k - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return out;
}

std::vector<Edge> spanning_tree_min(
    std::span<const int> vertices,
    const std::function<bool(const std::vector<Edge>&, const std::vector<Edge>&)>& less) {
  if (vertices.empty()) throw std::invalid_argument("spanning_tree_min: empty vertex set");
  auto trees = labeled_trees(vertices);
  std::size_t best = 0;
  for (std::size_t t = 1; t < trees.size(); ++t) {
    if (less(trees[t], trees[best])) best = t;
  }
  return trees[best];
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycle_type(const Partition& mu) {
  std::vector<int> images(mu.size());
  int start = 1;
  for (int len : mu.parts()) {
    for (int k = 0; k < len; ++k) {
      int elem = start + k;
      images[elem - 1] = k + 1 < len ? elem + 1 : start;
    }
    start += len;
  }
  return Permutation(std::move(images));
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(n() + 1, false);
  std::vector<int> lengths;
  for (int i = 1; i <= n(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = (*this)(j)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.n() != n()) throw std::invalid_argument("Permutation::compose: size mismatch");
  std::vector<int> images(n());
  for (int i = 1; i <= n(); ++i) images[i - 1] = (*this)(other(i));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(n());
  for (int i = 1; i <= n(); ++i) images[(*this)(i) - 1] = i;
  return Permutation(std::move(images));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    visit(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

std::vector<ConjugacyClass> conjugacy_class_data(int n) {
  std::vector<ConjugacyClass> out;
  const Integer nfact = factorial(n);
  for (auto& mu : partitions_of(n)) {
    Integer z = mu.z();
    out.push_back({mu, Permutation::from_cycle_type(mu), Integer(nfact / z), z});
  }
  return out;
}

}  // namespace orbh

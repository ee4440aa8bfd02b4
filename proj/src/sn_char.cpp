#include "orbh/sn_char.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace orbh {

namespace {

using Memo = std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>;

// Beta-set form of lambda with `len` beads: beta_i = lambda_i + len - 1 - i.
std::vector<int> beta_set(const std::vector<int>& lambda, int len) {
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) {
    int part = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
    beta[i] = part + len - 1 - i;
  }
  return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> lambda;
  for (int i = 0; i < len; ++i) {
    int part = beta[i] - (len - 1 - i);
    if (part > 0) lambda.push_back(part);
  }
  return lambda;
}

// chi^lambda on the cycle type mu[from..]; border strips of length mu[from]
// are removed by sliding one bead of the beta-set down.
std::int64_t mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t from,
                    Memo& memo) {
  if (from == mu.size()) return lambda.empty() ? 1 : 0;
  std::vector<int> rest(mu.begin() + static_cast<long>(from), mu.end());
  auto key = std::make_pair(lambda, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = mu[from];
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta = beta_set(lambda, len);
  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) ++between;
    }
    std::vector<int> moved = beta;
    moved[i] = target;
    std::int64_t sub = mn_rec(from_beta_set(moved), mu, from + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("mn_character: size mismatch");
  Memo memo;
  return mn_rec(lambda.vec(), mu.vec(), 0, memo);
}

CharacterTable::CharacterTable(int n) : n_(n), partitions_(partitions_of(n)) {
  if (n < 0) throw std::invalid_argument("CharacterTable: negative n");
  for (std::size_t i = 0; i < partitions_.size(); ++i) index_.emplace(partitions_[i], static_cast<int>(i));
  Memo memo;
  values_.assign(partitions_.size(), std::vector<std::int64_t>(partitions_.size(), 0));
  for (std::size_t row = 0; row < partitions_.size(); ++row) {
    for (std::size_t col = 0; col < partitions_.size(); ++col) {
      values_[row][col] = mn_rec(partitions_[row].vec(), partitions_[col].vec(), 0, memo);
    }
  }
}

int CharacterTable::index(const Partition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) throw std::invalid_argument("CharacterTable: partition of wrong size");
  return it->second;
}

std::int64_t CharacterTable::value(const Partition& lambda, const Partition& mu) const {
  return values_[index(lambda)][index(mu)];
}

std::int64_t CharacterTable::dim(const Partition& lambda) const {
  return values_[index(lambda)].back();  // (1^n) is last in canonical order
}

std::string CharacterTable::to_csv() const {
  std::ostringstream out;
  out << "lambda";
  for (const auto& mu : partitions_) out << ",\"" << mu.to_string() << '"';
  out << '\n';
  for (std::size_t row = 0; row < partitions_.size(); ++row) {
    out << '"' << partitions_[row].to_string() << '"';
    for (auto v : values_[row]) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

const CharacterTable& character_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  if (n > degree_cap()) {
    throw BudgetExceeded("character table degree " + std::to_string(n) + " exceeds cap " +
                         std::to_string(degree_cap()));
  }
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<CharacterTable>(n);
  return *slot;
}

Rational ClassFunction::at(const Partition& mu) const {
  auto it = values.find(mu);
  if (it == values.end()) throw std::invalid_argument("ClassFunction: undefined on " + mu.to_string());
  return it->second;
}

ClassFunction irreducible_character(const Partition& lambda) {
  const auto& table = character_table(lambda.size());
  ClassFunction f{lambda.size(), {}};
  for (const auto& mu : table.partitions()) f.values[mu] = Rational(table.value(lambda, mu));
  return f;
}

SymFunc characteristic_map(const ClassFunction& f) {
  SymFunc p_expansion(Basis::p);
  for (const auto& mu : partitions_of(f.n)) {
    Rational c = f.at(mu) / Rational(mu.z());
    if (c != 0) p_expansion.add_term(mu, c);
  }
  if (p_expansion.is_zero()) return SymFunc(Basis::s);
  return to_basis(Basis::s, p_expansion);
}

ClassFunction permutation_character(int n,
                                    const std::function<Integer(const Permutation&)>& fixed_points) {
  ClassFunction f{n, {}};
  for (const auto& cls : conjugacy_class_data(n)) {
    f.values[cls.cycle_type] = Rational(fixed_points(cls.representative));
  }
  return f;
}

bool fixes(const Permutation& w, const SetPartition& pi) {
  const int n = pi.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (pi.same_block(i, j) != pi.same_block(w(i), w(j))) return false;
    }
  }
  return true;
}

ClassFunction permutation_character(std::span<const SetPartition> family) {
  if (family.empty()) throw std::invalid_argument("permutation_character: empty family");
  const int n = family.front().n();
  return permutation_character(n, [&](const Permutation& w) {
    Integer count = 0;
    for (const auto& pi : family) {
      if (fixes(w, pi)) ++count;
    }
    return count;
  });
}

}  // namespace orbh

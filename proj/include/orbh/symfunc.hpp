#pragma once

// Symmetric functions with coefficients in Q[q]. The power-sum basis p is the
// internal pivot for every product; the Schur basis s is the reporting basis.

#include "orbh/combinatorics.hpp"
#include "orbh/qpoly.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace orbh {

enum class Basis { m, h, e, p, s };

char basis_letter(Basis b);
Basis parse_basis(std::string_view text);

/// Largest degree for which transition matrices and character tables are
/// built. Defaults to 24.
int degree_cap();
void set_degree_cap(int cap);

class SymFunc {
 public:
  using Terms = std::map<Partition, QPoly, PartitionOrder>;

  explicit SymFunc(Basis basis = Basis::s) : basis_(basis) {}
  static SymFunc single(Basis basis, const Partition& lambda, const QPoly& coef = 1);
  static SymFunc s(const Partition& lambda) { return single(Basis::s, lambda); }
  static SymFunc h(const Partition& lambda) { return single(Basis::h, lambda); }
  static SymFunc e(const Partition& lambda) { return single(Basis::e, lambda); }
  static SymFunc p(const Partition& lambda) { return single(Basis::p, lambda); }
  static SymFunc m(const Partition& lambda) { return single(Basis::m, lambda); }
  static SymFunc one() { return single(Basis::s, Partition{}); }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  QPoly coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const QPoly& coef);

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a homogeneous nonzero function; throws otherwise.
  int degree() const;
  bool is_q_free() const;
  /// The coefficient of q^d, as a q-free function.
  SymFunc q_part(int d) const;
  SymFunc at_q_equal_one() const;
  /// Largest q exponent present, or -1 for zero.
  int q_degree() const;

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const QPoly& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const QPoly& c) { return a *= c; }
  friend SymFunc operator*(const QPoly& c, SymFunc a) { return a *= c; }

  /// Mathematical equality; converts to a common basis when needed.
  friend bool operator==(const SymFunc& a, const SymFunc& b);

  /// "s[4] + q*s[2,2]"; the zero function renders as "0".
  std::string to_string() const;
  static SymFunc parse(std::string_view text);
  /// {basis, terms: [{partition, qpoly: [[exp, num, den], ...]}]}
  nlohmann::json to_json() const;
  static SymFunc from_json(const nlohmann::json& j);

 private:
  Basis basis_;
  Terms terms_;
};

SymFunc to_basis(Basis target, const SymFunc& f);

/// Product in the basis of `f` (both factors pass through p).
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// s_mu * h_a through horizontal strips, in the Schur basis.
SymFunc pieri_multiply(const Partition& mu, int a);

/// f[g] in the Schur basis. Both arguments must be q-free and g must have no
/// constant term.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// Internal (Kronecker) product of two homogeneous functions of equal degree,
/// in the Schur basis. Coefficients may involve q.
SymFunc kronecker(const SymFunc& f, const SymFunc& g);

/// Keeps the Schur terms whose index satisfies `keep`.
SymFunc truncate(const SymFunc& f, const PartitionFilter& keep);

struct NegativeCoefficient {
  Partition lambda;
  int q_power = 0;
  Rational coefficient;
};

struct SchurPositivity {
  bool positive = true;
  std::optional<NegativeCoefficient> witness;
};

/// Tests every Schur coefficient; the witness is the first negative one in
/// canonical order.
SchurPositivity is_schur_positive(const SymFunc& f);

}  // namespace orbh

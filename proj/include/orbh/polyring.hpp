#pragma once

// Sparse polynomials over Q in the variables x_{i,j}, {i,j} a 2-subset of [n].

#include "orbh/combinatorics.hpp"
#include "orbh/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbh {

/// The variable x_{i,j}; stored canonically with i < j. Codes compare in the
/// order {i,j} < {k,l} iff i < k, or i = k and j < l.
class VarId {
 public:
  VarId() = default;
  VarId(int i, int j);
  static VarId from_code(std::uint16_t code) {
    VarId v;
    v.code_ = code;
    return v;
  }
  int i() const { return code_ >> 8; }
  int j() const { return code_ & 0xff; }
  std::uint16_t code() const { return code_; }
  /// Position among the C(n,2) variables in the same order (0-based).
  int index(int n) const;
  std::string to_string() const;
  friend auto operator<=>(const VarId&, const VarId&) = default;

 private:
  std::uint16_t code_ = 0;
};

int num_vars(int n);
/// All variables of C[x_{[n] choose 2}] in ascending code order.
std::vector<VarId> all_vars(int n);

class Monomial {
 public:
  struct Factor {
    std::uint16_t var;  // VarId code
    std::uint16_t exp;
    friend bool operator==(const Factor&, const Factor&) = default;
    friend auto operator<=>(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  static Monomial variable(VarId v, int exp = 1);
  /// Product of the given variables (repetitions raise exponents).
  static Monomial product(std::span<const VarId> vars);

  int degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  const std::vector<Factor>& factors() const { return factors_; }
  int exponent(VarId v) const;
  bool is_squarefree() const;
  /// Bitmask of the variables present, hashed into 64 bits.
  std::uint64_t support_mask() const { return mask_; }

  bool divides(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// x_{i,j} -> x_{w(i),w(j)}.
  Monomial relabel(const Permutation& w) const;

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  /// Structural order (not a monomial order); used for canonical containers.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.factors_ <=> b.factors_;
  }

 private:
  void finish();
  std::vector<Factor> factors_;
  int degree_ = 0;
  std::uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic, graded lexicographic or lexicographic order
/// over a variable precedence. With the default precedence x_S < x_T exactly
/// when S precedes T in code order; `reversed` flips it.
class MonomialOrder {
 public:
  enum class Kind { grevlex, grlex, lex };

  MonomialOrder() = default;
  MonomialOrder(Kind kind, bool reversed = false) : kind_(kind), reversed_(reversed) {}
  static MonomialOrder grevlex() { return {Kind::grevlex}; }
  static MonomialOrder grlex() { return {Kind::grlex}; }
  static MonomialOrder lex() { return {Kind::lex}; }
  /// "grevlex" | "grlex" | "lex", and "paper-example" | "reverse".
  static MonomialOrder parse(std::string_view kind, std::string_view var_order = "paper-example");

  Kind kind() const { return kind_; }
  bool reversed() const { return reversed_; }
  bool is_graded() const { return kind_ != Kind::lex; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string kind_name() const;
  std::string var_order_name() const { return reversed_ ? "reverse" : "paper-example"; }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_ = Kind::grevlex;
  bool reversed_ = false;
};

class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  explicit Poly(int n) : n_(n) {}
  static Poly constant(int n, const Rational& c);
  static Poly variable(int n, int i, int j);
  static Poly from_monomial(int n, const Monomial& m, const Rational& c = 1);
  /// Sums duplicate monomials and drops zeros.
  static Poly from_terms(int n, std::vector<Term> terms);

  int n() const { return n_; }
  /// Terms in descending default-grevlex order.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;
  const Term& leading_term(const MonomialOrder& order) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Monomial& m);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Substitutes point[v.index(n)] for each variable v.
  Rational evaluate(std::span<const Rational> point) const;
  Rational evaluate(std::span<const int> point) const;
  /// tau(f): the top-degree homogeneous component. Throws on zero.
  Poly top_form() const;
  Poly relabel(const Permutation& w) const;
  /// Divides by the leading coefficient under `order`.
  Poly monic(const MonomialOrder& order) const;

  /// "x{1,2}*x{3,4} - x{1,3}*x{2,4}"
  std::string to_string() const;
  /// Same format with terms listed in descending `order`.
  std::string to_string(const MonomialOrder& order) const;
  /// n = 0 infers the ring from the largest index that appears.
  static Poly parse(std::string_view text, int n = 0);

 private:
  void normalize();
  int n_ = 0;
  std::vector<Term> terms_;
};

}  // namespace orbh

#pragma once

#include "orbh/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace orbh {

/// Polynomial in q with exact rational coefficients. Zero coefficients are
/// never stored.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Rational& c) { set(0, c); }  // NOLINT: implicit constant
  QPoly(int c) : QPoly(Rational(c)) {}     // NOLINT
  static QPoly monomial(int exponent, const Rational& c = 1);

  const std::map<int, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int exponent) const;
  void set(int exponent, const Rational& c);
  void add(int exponent, const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  Rational at_one() const;
  /// Every coefficient is >= 0.
  bool is_nonnegative() const;
  bool has_integer_coefficients() const;
  /// The smallest exponent with a negative coefficient, if any.
  std::optional<int> first_negative() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(QPoly a) { return a *= Rational(-1); }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// "1 + 2*q - 1/2*q^3".
  std::string to_string() const;
  static QPoly parse(std::string_view text);

 private:
  std::map<int, Rational> coeffs_;
};

}  // namespace orbh

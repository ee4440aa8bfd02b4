#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbh {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a computation would exceed a configured resource cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "3", "-7/2". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
  r.canonicalize();
  return r;
}

inline Integer factorial(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

}  // namespace orbh

#pragma once

// Reduced Groebner bases over Q: Buchberger, Buchberger-Moeller for finite
// point sets, normal forms, standard monomials and associated graded ideals.

#include "orbh/polyring.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbh {

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  /// Wraps generators that already form a reduced basis; they are made monic
  /// and sorted by leading monomial. No Buchberger step is run.
  GroebnerBasis(int n, MonomialOrder order, std::vector<Poly> generators);

  int n() const { return n_; }
  const MonomialOrder& order() const { return order_; }
  /// Monic, ascending by leading monomial.
  const std::vector<Poly>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }

  bool is_unit_ideal() const;
  bool in_initial_ideal(const Monomial& m) const;
  /// Index of some generator whose leading monomial divides m.
  std::optional<std::size_t> reducer(const Monomial& m) const;

  /// Full reduction; the result is supported on standard monomials.
  Poly normal_form(const Poly& f) const;
  Poly normal_form(const Monomial& m) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

  /// "# groebner n=4 order=grevlex var-order=paper-example" then one
  /// generator per line.
  std::string to_text() const;
  static GroebnerBasis from_text(std::string_view text);

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.n_ == b.n_ && a.order_ == b.order_ && a.generators_ == b.generators_;
  }

 private:
  void index();
  int n_ = 0;
  MonomialOrder order_;
  std::vector<Poly> generators_;
  std::vector<Monomial> leads_;
  // Tails in descending order, leading term removed.
  std::vector<std::vector<Poly::Term>> tails_;
  // Generators bucketed by the first variable of their leading monomial.
  std::vector<std::vector<std::size_t>> by_first_var_;
  std::optional<std::size_t> constant_;
};

struct BuchbergerOptions {
  /// Cap on S-pairs processed; exceeding it raises BudgetExceeded.
  std::size_t max_pairs = 2'000'000;
};

/// Reduced Groebner basis of the ideal generated by `gens` (n taken from the
/// polynomials unless given).
GroebnerBasis buchberger(std::span<const Poly> gens, const MonomialOrder& order,
                         const BuchbergerOptions& options = {}, int n = 0);

/// Vanishing ideal of a finite point set. points[k][v.index(n)] is the
/// coordinate of variable v at point k. Duplicate points are rejected.
GroebnerBasis ideal_of_points(int n, std::span<const std::vector<int>> points,
                              const MonomialOrder& order);

/// {tau(g)}: a Groebner basis of gr I for a graded order. Rejects lex.
GroebnerBasis associated_graded(const GroebnerBasis& g);

struct StandardMonomialSet {
  /// by_degree[d]: degree-d standard monomials, ascending in the basis order.
  std::vector<std::vector<Monomial>> by_degree;

  std::size_t size() const;
  std::vector<std::size_t> hilbert_function() const;
  std::vector<Monomial> all() const;
};

/// Monomials outside the initial ideal. Without max_degree the quotient must
/// be finite; `cap` bounds the total count (BudgetExceeded beyond it).
StandardMonomialSet standard_monomials(const GroebnerBasis& g,
                                       std::optional<int> max_degree = std::nullopt,
                                       std::size_t cap = 5'000'000);

/// True iff every polynomial in a reduces to zero modulo b.
bool reduce_ideal_into(std::span<const Poly> a, const GroebnerBasis& b);
/// Index of the first polynomial with a nonzero normal form, if any.
std::optional<std::size_t> first_nonreducing(std::span<const Poly> a, const GroebnerBasis& b);

struct SPairReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<std::size_t, std::size_t>> failing;
};

/// Re-checks the Buchberger criterion on every S-pair of non-coprime leading
/// monomials.
SPairReport check_s_pairs(const GroebnerBasis& g);

/// Monic, and no generator term divisible by another generator's leading
/// monomial.
bool is_reduced(const GroebnerBasis& g);

}  // namespace orbh

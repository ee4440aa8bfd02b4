#include "orbh/polyring.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace orbh;

namespace {

Rational ratio(int a, int b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Monomial random_monomial(std::mt19937& rng, int n, int max_deg) {
  auto vars = all_vars(n);
  std::vector<VarId> picked;
  const int deg = static_cast<int>(rng() % (max_deg + 1));
  for (int k = 0; k < deg; ++k) picked.push_back(vars[rng() % vars.size()]);
  return Monomial::product(picked);
}

Poly random_poly(std::mt19937& rng, int n, int terms, int max_deg) {
  std::vector<Poly::Term> ts;
  for (int k = 0; k < terms; ++k) {
    ts.emplace_back(random_monomial(rng, n, max_deg),
                    ratio(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 4)));
  }
  return Poly::from_terms(n, std::move(ts));
}

Poly x(int i, int j, int n = 4) { return Poly::variable(n, i, j); }

const MonomialOrder kOrders[] = {
    MonomialOrder::grevlex(), MonomialOrder::grlex(), MonomialOrder::lex(),
    MonomialOrder(MonomialOrder::Kind::grevlex, true), MonomialOrder(MonomialOrder::Kind::grlex, true),
    MonomialOrder(MonomialOrder::Kind::lex, true)};

}  // namespace

TEST(VarId, CodesAndIndex) {
  EXPECT_THROW(VarId(2, 2), std::invalid_argument);
  EXPECT_EQ(VarId(3, 2), VarId(2, 3));
  EXPECT_THROW(VarId(0, 2), std::invalid_argument);
  EXPECT_EQ(VarId(2, 5).to_string(), "x{2,5}");
  auto vars = all_vars(5);
  ASSERT_EQ(static_cast<int>(vars.size()), num_vars(5));
  EXPECT_EQ(num_vars(5), 10);
  for (int k = 0; k < 10; ++k) EXPECT_EQ(vars[k].index(5), k);
  EXPECT_TRUE(std::is_sorted(vars.begin(), vars.end()));
  EXPECT_LT(VarId(1, 5), VarId(2, 3));
}

TEST(Monomial, Arithmetic) {
  VarId a(1, 2), b(1, 3), c(2, 3);
  std::vector<VarId> v1{a, a, b}, v2{b, c};
  auto m1 = Monomial::product(v1), m2 = Monomial::product(v2);
  EXPECT_EQ(m1.degree(), 3);
  EXPECT_EQ(m1.exponent(a), 2);
  EXPECT_FALSE(m1.is_squarefree());
  EXPECT_TRUE(m2.is_squarefree());
  auto l = m1.lcm(m2);
  EXPECT_EQ(l.degree(), 4);
  EXPECT_TRUE(m1.divides(l));
  EXPECT_TRUE(m2.divides(l));
  EXPECT_EQ((l / m1) * m1, l);
  EXPECT_FALSE(m1.coprime(m2));
  EXPECT_TRUE(Monomial::variable(a).coprime(Monomial::variable(c)));
  EXPECT_EQ(m1.to_string(), "x{1,2}^2*x{1,3}");
  EXPECT_TRUE(Monomial().is_one());
  EXPECT_EQ(Monomial().to_string(), "1");
  // Relabelling by a transposition swaps 1 and 2: x{1,3} -> x{2,3}.
  EXPECT_EQ(Monomial::variable(b).relabel(Permutation({2, 1, 3})), Monomial::variable(c));
}

TEST(MonomialOrder, OneIsMinimumAndDegreeDominates) {
  std::mt19937 rng(1);
  for (const auto& ord : kOrders) {
    for (int k = 0; k < 200; ++k) {
      auto m = random_monomial(rng, 5, 4);
      if (m.is_one()) continue;
      EXPECT_TRUE(ord.less(Monomial(), m));
    }
  }
  auto deg2 = Monomial::product(std::vector<VarId>{VarId(4, 5), VarId(4, 5)});
  auto deg1 = Monomial::variable(VarId(1, 2));
  EXPECT_TRUE(MonomialOrder::grevlex().greater(deg2, deg1));
  EXPECT_TRUE(MonomialOrder::grlex().greater(deg2, deg1));
}

TEST(MonomialOrder, LexOrientation) {
  auto x12 = Monomial::variable(VarId(1, 2)), x13 = Monomial::variable(VarId(1, 3));
  // With the default precedence x{1,2} < x{1,3}, and reversal flips it.
  EXPECT_TRUE(MonomialOrder::lex().less(x12, x13));
  EXPECT_TRUE(MonomialOrder(MonomialOrder::Kind::lex, true).greater(x12, x13));
  EXPECT_EQ(MonomialOrder::parse("lex", "reverse"), MonomialOrder(MonomialOrder::Kind::lex, true));
  EXPECT_THROW(MonomialOrder::parse("revlex"), std::invalid_argument);
  EXPECT_THROW(MonomialOrder::parse("lex", "sideways"), std::invalid_argument);
}

TEST(MonomialOrder, GrevlexVersusGrlex) {
  // Degree-2 monomials in three variables a < b < c.
  VarId a(1, 2), b(1, 3), c(2, 3);
  auto ac = Monomial::product(std::vector<VarId>{a, c});
  auto bb = Monomial::product(std::vector<VarId>{b, b});
  // grlex compares the largest variable first: ac has c. grevlex looks at the
  // smallest variable: ac contains a, so it is smaller.
  EXPECT_TRUE(MonomialOrder::grlex().greater(ac, bb));
  EXPECT_TRUE(MonomialOrder::grevlex().less(ac, bb));
}

TEST(MonomialOrder, StrictTotalAndMultiplicative) {
  std::mt19937 rng(2);
  for (const auto& ord : kOrders) {
    for (int k = 0; k < 500; ++k) {
      auto a = random_monomial(rng, 5, 4), b = random_monomial(rng, 5, 4), c = random_monomial(rng, 5, 4);
      auto ab = ord.compare(a, b);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ord.compare(b, a), 0 <=> ab);
      EXPECT_EQ(ord.compare(a * c, b * c), ab);
      if (ord.less(a, b) && ord.less(b, c)) {
        EXPECT_TRUE(ord.less(a, c));
      }
    }
  }
}

TEST(Poly, RingAxioms) {
  std::mt19937 rng(3);
  for (int k = 0; k < 100; ++k) {
    auto f = random_poly(rng, 4, 5, 3), g = random_poly(rng, 4, 5, 3), h = random_poly(rng, 4, 4, 2);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f * Poly::constant(4, 1), f);
    EXPECT_TRUE((f * Poly(4)).is_zero());
  }
}

TEST(Poly, TopFormIsMultiplicative) {
  std::mt19937 rng(4);
  for (int k = 0; k < 100; ++k) {
    auto f = random_poly(rng, 5, 6, 3), g = random_poly(rng, 5, 6, 3);
    if (f.is_zero() || g.is_zero()) continue;
    EXPECT_EQ((f * g).top_form(), f.top_form() * g.top_form());
    EXPECT_TRUE(f.top_form().is_homogeneous());
    EXPECT_EQ(f.top_form().degree(), f.degree());
    EXPECT_EQ(f.top_form() == f, f.is_homogeneous());
  }
  auto v = x(1, 2);
  EXPECT_EQ((v * v - v).top_form(), v * v);
  auto vertex_sum = x(1, 2) + x(1, 3) + x(1, 4);
  EXPECT_EQ((vertex_sum - Poly::constant(4, 1)).top_form(), vertex_sum);
  EXPECT_THROW(Poly(4).top_form(), std::invalid_argument);
}

TEST(Poly, Evaluate) {
  // Point of {{1,2},{3,4}} in the index order 12, 13, 14, 23, 24, 34.
  std::vector<int> point{1, 0, 0, 0, 0, 1};
  EXPECT_EQ((x(1, 2) * x(3, 4)).evaluate(point), 1);
  EXPECT_EQ(x(1, 3).evaluate(point), 0);
  std::mt19937 rng(5);
  for (int k = 0; k < 50; ++k) {
    auto f = random_poly(rng, 4, 5, 3), g = random_poly(rng, 4, 5, 3);
    std::vector<Rational> pt;
    for (int v = 0; v < 6; ++v) pt.push_back(ratio(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3)));
    EXPECT_EQ((f * g).evaluate(pt), f.evaluate(pt) * g.evaluate(pt));
    EXPECT_EQ((f + g).evaluate(pt), f.evaluate(pt) + g.evaluate(pt));
  }
  EXPECT_THROW(x(1, 2).evaluate(std::vector<int>{1, 0}), std::invalid_argument);
}

TEST(Poly, RelabelIsARingMap) {
  std::mt19937 rng(6);
  Permutation w({3, 1, 4, 2});
  for (int k = 0; k < 50; ++k) {
    auto f = random_poly(rng, 4, 5, 3), g = random_poly(rng, 4, 5, 3);
    EXPECT_EQ((f * g).relabel(w), f.relabel(w) * g.relabel(w));
    EXPECT_EQ(f.relabel(w).relabel(w.inverse()), f);
  }
}

TEST(Poly, TextRoundTrip) {
  std::mt19937 rng(7);
  for (int k = 0; k < 100; ++k) {
    auto f = random_poly(rng, 5, 6, 3);
    EXPECT_EQ(Poly::parse(f.to_string(), 5), f) << f.to_string();
    for (const auto& ord : kOrders) EXPECT_EQ(Poly::parse(f.to_string(ord), 5), f);
  }
  auto f = Poly::parse("x{1,2}*x{3,4} - x{1,3}*x{2,4}");
  EXPECT_EQ(f.n(), 4);
  EXPECT_EQ(f, x(1, 2) * x(3, 4) - x(1, 3) * x(2, 4));
  EXPECT_EQ(Poly::parse("2/3*x{1,2}^2 - 1"), Rational(2, 3) * x(1, 2, 2) * x(1, 2, 2) - Poly::constant(2, 1));
  EXPECT_TRUE(Poly::parse("0").is_zero());
  EXPECT_EQ(Poly::parse("x{2,1}"), Poly::parse("x{1,2}"));
  EXPECT_THROW(Poly::parse("x{1,1}"), std::invalid_argument);
  EXPECT_THROW(Poly::parse("x{1,2} +"), std::invalid_argument);
  EXPECT_THROW(Poly::parse("y{1,2}"), std::invalid_argument);
}

TEST(Poly, LeadingTermAndMonic) {
  auto f = Rational(3) * x(1, 2) * x(3, 4) + Rational(2) * x(1, 3) - Poly::constant(4, 5);
  auto lt = f.leading_term(MonomialOrder::grevlex());
  EXPECT_EQ(lt.first.degree(), 2);
  EXPECT_EQ(lt.second, 3);
  EXPECT_EQ(f.monic(MonomialOrder::grevlex()).leading_term(MonomialOrder::grevlex()).second, 1);
  EXPECT_EQ(f.coefficient(Monomial()), -5);
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(Poly(4).degree(), -1);
}

#include "oracles.hpp"
#include "orbh/symfunc.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace orbh;

namespace {

const Basis kBases[] = {Basis::m, Basis::h, Basis::e, Basis::p, Basis::s};

// Exact comparison of stored terms, no basis conversion.
void expect_same_terms(const SymFunc& a, const SymFunc& b) {
  if (!a.is_zero() || !b.is_zero()) {
    ASSERT_EQ(a.basis(), b.basis());
  }
  EXPECT_EQ(a.terms(), b.terms()) << a.to_string() << " vs " << b.to_string();
}

SymFunc random_function(std::mt19937& rng, int n, Basis basis) {
  SymFunc f(basis);
  for (const auto& lambda : partitions_of(n)) {
    if (rng() % 2) continue;
    QPoly c;
    for (int e = 0; e < 3; ++e) {
      Rational r(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3));
      r.canonicalize();
      c.add(e, r);
    }
    f.add_term(lambda, c);
  }
  return f;
}

}  // namespace

TEST(QPoly, ArithmeticAndText) {
  QPoly a = QPoly::parse("1 + 2*q - 1/2*q^3");
  EXPECT_EQ(a.coefficient(3), Rational(-1, 2));
  EXPECT_EQ(a.to_string(), "1 + 2*q - 1/2*q^3");
  EXPECT_EQ(QPoly::parse(a.to_string()), a);
  EXPECT_EQ(a - a, QPoly());
  EXPECT_EQ((a * QPoly::monomial(2)).degree(), 5);
  EXPECT_EQ(a.at_one(), Rational(5, 2));
  EXPECT_EQ(a.first_negative(), 3);
  EXPECT_FALSE(a.has_integer_coefficients());
  EXPECT_TRUE(QPoly::parse("q^2 + 3").is_nonnegative());
  EXPECT_EQ(QPoly().to_string(), "0");
}

TEST(SymFunc, BasisRoundTrips) {
  for (int n = 0; n <= 8; ++n) {
    for (Basis from : kBases) {
      for (Basis via : kBases) {
        for (const auto& lambda : partitions_of(n)) {
          auto f = SymFunc::single(from, lambda);
          expect_same_terms(to_basis(from, to_basis(via, f)), f);
        }
      }
    }
  }
}

TEST(SymFunc, CompleteAndElementaryThroughKostka) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& mu : partitions_of(n)) {
      auto h = to_basis(Basis::s, SymFunc::h(mu));
      auto e = to_basis(Basis::s, SymFunc::e(mu));
      for (const auto& lambda : partitions_of(n)) {
        EXPECT_EQ(h.coefficient(lambda), QPoly(Rational(oracle::kostka(lambda, mu))));
        EXPECT_EQ(e.coefficient(lambda), QPoly(Rational(oracle::kostka(lambda.conjugate(), mu))));
      }
    }
  }
}

TEST(SymFunc, SchurToMonomialThroughKostka) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      auto s = to_basis(Basis::m, SymFunc::s(lambda));
      for (const auto& mu : partitions_of(n)) {
        EXPECT_EQ(s.coefficient(mu), QPoly(Rational(oracle::kostka(lambda, mu))));
      }
    }
  }
}

TEST(SymFunc, PowerSumThroughFrobeniusFormula) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& mu : partitions_of(n)) {
      auto p = to_basis(Basis::s, SymFunc::p(mu));
      for (const auto& lambda : partitions_of(n)) {
        EXPECT_EQ(p.coefficient(lambda), QPoly(Rational(oracle::frobenius_character(lambda, mu))));
      }
    }
  }
}

TEST(SymFunc, RingAxioms) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_function(rng, 2, Basis::s);
    auto g = random_function(rng, 3, Basis::h);
    auto k = random_function(rng, 3, Basis::e);
    EXPECT_EQ(multiply(f, g), multiply(g, f));
    EXPECT_EQ(multiply(f, g + k), multiply(f, g) + multiply(f, k));
    EXPECT_EQ(multiply(multiply(f, g), k), multiply(f, multiply(g, k)));
    EXPECT_EQ(multiply(f, SymFunc::one()), f);
  }
}

TEST(SymFunc, PieriAgreesWithProduct) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (int a = 1; a <= 3; ++a) {
        auto want = to_basis(Basis::s, multiply(SymFunc::s(mu), SymFunc::h(Partition{a})));
        expect_same_terms(pieri_multiply(mu, a), want);
      }
    }
  }
}

TEST(SymFunc, TextAndJsonRoundTrip) {
  std::mt19937 rng(5);
  for (Basis b : kBases) {
    for (int n = 0; n <= 5; ++n) {
      auto f = random_function(rng, n, b);
      expect_same_terms(SymFunc::parse(f.to_string()), f);
      expect_same_terms(SymFunc::from_json(f.to_json()), f);
      expect_same_terms(SymFunc::from_json(nlohmann::json::parse(f.to_json().dump())), f);
    }
  }
  EXPECT_EQ(SymFunc::parse("s[4] + q*s[2,2]").to_string(), "s[4] + q*s[2,2]");
  EXPECT_EQ(SymFunc().to_string(), "0");
  EXPECT_THROW(SymFunc::parse("s[4] + h[2,2]"), std::invalid_argument);
  EXPECT_THROW(SymFunc::parse("s[2,3]"), std::invalid_argument);
}

TEST(SymFunc, QParts) {
  auto f = SymFunc::parse("s[4] + q*s[2,2] + q^2*s[2,2] - q^2*s[3,1]");
  EXPECT_EQ(f.q_degree(), 2);
  EXPECT_EQ(f.q_part(2), SymFunc::parse("s[2,2] - s[3,1]"));
  EXPECT_EQ(f.at_q_equal_one(), SymFunc::parse("s[4] + 2*s[2,2] - s[3,1]"));
  EXPECT_EQ(f.degree(), 4);
  auto pos = is_schur_positive(f);
  ASSERT_FALSE(pos.positive);
  EXPECT_EQ(pos.witness->lambda, Partition({3, 1}));
  EXPECT_EQ(pos.witness->q_power, 2);
  EXPECT_EQ(pos.witness->coefficient, -1);
  EXPECT_TRUE(is_schur_positive(SymFunc::parse("s[4] + q*s[2,2]")).positive);
}

TEST(Plethysm, SmallKnownValues) {
  auto h = [](int k) { return SymFunc::h(Partition{k}); };
  EXPECT_EQ(plethysm(h(2), h(2)).to_string(), "s[4] + s[2,2]");
  EXPECT_EQ(plethysm(SymFunc::e(Partition{2}), h(2)).to_string(), "s[3,1]");
  EXPECT_EQ(plethysm(h(3), h(2)).to_string(), "s[6] + s[4,2] + s[2,2,2]");
  EXPECT_EQ(plethysm(h(2), h(3)).to_string(), "s[6] + s[4,2]");
  EXPECT_EQ(plethysm(h(1), SymFunc::s(Partition{2, 1})), SymFunc::s(Partition{2, 1}));
  EXPECT_EQ(plethysm(SymFunc::s(Partition{2, 1}), h(1)), SymFunc::s(Partition{2, 1}));
  EXPECT_EQ(plethysm(SymFunc::p(Partition{3}), SymFunc::p(Partition{2})), SymFunc::p(Partition{6}));
  EXPECT_THROW(plethysm(h(2), SymFunc::one()), std::invalid_argument);
}

TEST(Plethysm, EvenPartitionAndTwoRowSums) {
  for (int a = 1; a <= 5; ++a) {
    SymFunc want(Basis::s);
    for (const auto& lambda : partitions_of(2 * a, [](const Partition& p) { return p.is_even(); })) {
      want.add_term(lambda, 1);
    }
    expect_same_terms(plethysm(SymFunc::h(Partition{a}), SymFunc::h(Partition{2})), want);
  }
  for (int b = 1; b <= 6; ++b) {
    SymFunc want(Basis::s);
    for (int d = 0; 2 * d <= b; ++d) want.add_term(Partition::from_unsorted({2 * b - 2 * d, 2 * d}), 1);
    expect_same_terms(plethysm(SymFunc::h(Partition{2}), SymFunc::h(Partition{b})), want);
  }
}

TEST(Plethysm, MultiplicativeInOuterArgument) {
  auto g = SymFunc::h(Partition{2});
  auto f1 = SymFunc::h(Partition{2});
  auto f2 = SymFunc::e(Partition{1});
  EXPECT_EQ(plethysm(multiply(f1, f2), g), to_basis(Basis::s, multiply(plethysm(f1, g), plethysm(f2, g))));
  EXPECT_EQ(plethysm(f1 + f2, g), plethysm(f1, g) + plethysm(f2, g));
}

TEST(Kronecker, TrivialSignAndPowerSums) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      expect_same_terms(kronecker(SymFunc::s(lambda), SymFunc::h(Partition{n})), SymFunc::s(lambda));
      expect_same_terms(kronecker(SymFunc::s(lambda), SymFunc::e(Partition{n})), SymFunc::s(lambda.conjugate()));
    }
    for (const auto& mu : partitions_of(n)) {
      for (const auto& nu : partitions_of(n)) {
        auto k = kronecker(SymFunc::p(mu), SymFunc::p(nu));
        if (mu == nu) {
          EXPECT_EQ(k, SymFunc::p(mu) * QPoly(Rational(mu.z())));
        } else {
          EXPECT_TRUE(k.is_zero());
        }
      }
    }
  }
  EXPECT_EQ(kronecker(SymFunc::s(Partition{2, 1}), SymFunc::s(Partition{2, 1})).to_string(),
            "s[3] + s[2,1] + s[1,1,1]");
  auto qf = SymFunc::s(Partition{2}) * QPoly::monomial(1);
  EXPECT_EQ(kronecker(qf, qf), SymFunc::s(Partition{2}) * QPoly::monomial(2));
}

TEST(SymFunc, Truncate) {
  auto f = SymFunc::parse("s[4] + s[3,1] + 2*s[2,2]");
  EXPECT_EQ(truncate(f, [](const Partition& p) { return p.first_row() <= 3; }).to_string(), "s[3,1] + 2*s[2,2]");
}

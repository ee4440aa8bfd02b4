#include "oracles.hpp"
#include "orbh/loci.hpp"
#include "orbh/orbit_harmonics.hpp"

#include <gtest/gtest.h>

using namespace orbh;

namespace {

std::vector<Locus> small_loci() {
  return {build_locus(Partition{2, 2}),    build_locus(Partition{2, 2, 2}), build_locus(Partition{3, 3}),
          build_locus(Partition{2, 1, 1}), build_locus(Partition{3, 2, 1}), build_locus(Partition{2, 2, 1}),
          build_locus(Partition{4, 2}),    build_locus_pinm(3, 2),          build_locus_pinm(4, 2),
          build_locus_pinm(4, 3),          build_locus_pinm(5, 3),          build_locus_pinm(5, 2)};
}

}  // namespace

TEST(Embed, Examples) {
  EXPECT_EQ(embed(SetPartition(4, {{1}, {2}, {3}, {4}})), std::vector<int>(6, 0));
  // Index order 12, 13, 14, 23, 24, 34.
  EXPECT_EQ(embed(SetPartition(4, {{1, 2}, {3, 4}})), (std::vector<int>{1, 0, 0, 0, 0, 1}));
  EXPECT_EQ(embed(SetPartition(3, {{1, 2, 3}})), (std::vector<int>{1, 1, 1}));
  for (const auto& pi : set_partitions_max_block(6, 6)) {
    int ones = 0;
    for (int v : embed(pi)) ones += v;
    int want = 0;
    for (const auto& b : pi.blocks()) want += static_cast<int>(b.size() * (b.size() - 1) / 2);
    EXPECT_EQ(ones, want);
  }
}

TEST(Locus, BuildAndParse) {
  EXPECT_EQ(build_locus(Partition{2, 2}).size(), 3u);
  EXPECT_EQ(build_locus_pinm(4, 2).size(), 10u);
  auto single = build_locus(Partition{1, 1, 1, 1});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single.points[0], std::vector<int>(6, 0));
  EXPECT_EQ(parse_locus("pi:2^3").size(), 15u);
  EXPECT_EQ(parse_locus("pinm:5,3").size(), static_cast<std::size_t>(52 - 1 - 5));
  EXPECT_THROW(parse_locus("pi:"), std::invalid_argument);
  EXPECT_THROW(parse_locus("blob:3"), std::invalid_argument);
  EXPECT_THROW(build_locus(3, {}), std::invalid_argument);
  EXPECT_THROW(build_locus(3, {{0, 2, 0}}), std::invalid_argument);
  auto dedup = build_locus(3, {{1, 0, 0}, {0, 0, 0}, {1, 0, 0}});
  EXPECT_EQ(dedup.size(), 2u);
}

TEST(Pipeline, MatchesFiltrationOracle) {
  for (const auto& locus : small_loci()) {
    auto report = graded_character(locus);
    auto want = oracle::graded_module(locus.n, locus.points, 10);
    ASSERT_EQ(report.hilbert_function(), want.hilbert) << locus.label;
    for (std::size_t d = 0; d < report.degrees.size(); ++d) {
      const auto& frob = report.degrees[d].frobenius;
      std::map<Partition, Rational> got;
      for (const auto& [lambda, c] : frob.terms()) got[lambda] = c.coefficient(0);
      EXPECT_EQ(got, want.multiplicities[d]) << locus.label << " degree " << d;
    }
  }
}

TEST(Pipeline, DimensionIdentityAndUngradedCharacter) {
  for (const auto& locus : small_loci()) {
    auto report = graded_character(locus);
    EXPECT_TRUE(report.complete);
    EXPECT_EQ(report.total_dim(), locus.size()) << locus.label;
    EXPECT_EQ(report.grfrob.at_q_equal_one(), characteristic_map(permutation_character(locus))) << locus.label;
    for (const auto& deg : report.degrees) {
      EXPECT_EQ(static_cast<std::size_t>(deg.standard.size()), deg.dim);
      for (const auto& [lambda, c] : deg.frobenius.terms()) {
        EXPECT_TRUE(c.is_constant());
        EXPECT_TRUE(c.has_integer_coefficients());
        EXPECT_TRUE(c.is_nonnegative());
      }
      // The trace at the identity is the dimension.
      EXPECT_EQ(deg.traces.at(Partition(std::vector<int>(static_cast<std::size_t>(locus.n), 1))),
                Rational(static_cast<long>(deg.dim)));
    }
  }
}

TEST(Pipeline, ClosedFormExamples) {
  EXPECT_EQ(graded_character(build_locus(Partition{2, 2})).grfrob.to_string(), "s[4] + q*s[2,2]");
  EXPECT_EQ(graded_character(build_locus(Partition{2, 2, 2})).grfrob.to_string(),
            "s[6] + q*s[4,2] + q^2*s[2,2,2]");
  EXPECT_EQ(graded_character(build_locus(Partition{3, 3})).grfrob.to_string(), "s[6] + q*s[4,2]");
  EXPECT_EQ(graded_character(build_locus(Partition{2})).grfrob.to_string(), "s[2]");
  EXPECT_EQ(graded_character(build_locus(Partition{1, 1, 1, 1})).grfrob.to_string(), "s[4]");
  EXPECT_EQ(graded_character_of_ideal(gens_I(5), 5).grfrob.to_string(), "s[5] + q*s[3,2]");
  EXPECT_EQ(graded_character_of_ideal(gens_J(5), 5).grfrob.to_string(), "s[5] + q*s[3,2]");
  EXPECT_EQ(graded_character_of_ideal(gens_I(7), 7).grfrob.to_string(), "s[7] + q*s[5,2] + q^2*s[3,2,2]");
  EXPECT_EQ(graded_character_of_ideal(gens_J(7), 7).grfrob.to_string(), "s[7] + q*s[5,2]");
}

TEST(Pipeline, FirstRowPatternForPerfectMatchings) {
  for (int a = 1; a <= 3; ++a) {
    auto report = graded_character(build_locus(Partition(std::vector<int>(static_cast<std::size_t>(a), 2))));
    for (const auto& deg : report.degrees) {
      for (const auto& [lambda, c] : deg.frobenius.terms()) EXPECT_EQ(lambda.first_row(), 2 * a - 2 * deg.d);
    }
  }
}

TEST(Pipeline, CrossRouteAgreement) {
  for (int a = 1; a <= 3; ++a) {
    auto perfect = graded_character(build_locus(Partition(std::vector<int>(static_cast<std::size_t>(a), 2))));
    EXPECT_EQ(graded_character_of_ideal(gens_I(2 * a), 2 * a).grfrob, perfect.grfrob);
    auto two_blocks = graded_character(build_locus(Partition{a, a}));
    EXPECT_EQ(graded_character_of_ideal(gens_J(2 * a), 2 * a).grfrob, two_blocks.grfrob);
  }
}

TEST(Pipeline, OrdersAndThreadsAgree) {
  auto locus = build_locus_pinm(5, 3);
  PipelineOptions one_thread;
  one_thread.threads = 1;
  PipelineOptions four_threads;
  four_threads.threads = 4;
  auto base = graded_character(locus, MonomialOrder::grevlex(), one_thread);
  EXPECT_EQ(graded_character(locus, MonomialOrder::grevlex(), four_threads).grfrob, base.grfrob);
  EXPECT_EQ(graded_character(locus, MonomialOrder::grlex()).grfrob, base.grfrob);
  EXPECT_EQ(graded_character(locus, MonomialOrder(MonomialOrder::Kind::grevlex, true)).grfrob, base.grfrob);
  EXPECT_THROW(graded_character(locus, MonomialOrder::lex()), std::invalid_argument);
}

TEST(Pipeline, DegreeCapMarksIncomplete) {
  PipelineOptions cap;
  cap.max_degree = 1;
  auto report = graded_character(build_locus(Partition{2, 2, 2}), MonomialOrder::grevlex(), cap);
  EXPECT_FALSE(report.complete);
  EXPECT_EQ(report.grfrob.to_string(), "s[6] + q*s[4,2]");
  auto json = report.to_json();
  EXPECT_EQ(json["complete"], false);
  EXPECT_EQ(json["degrees"].size(), 2u);
}

TEST(Pipeline, ReportJson) {
  auto report = graded_character(build_locus(Partition{2, 2}));
  auto j = report.to_json();
  EXPECT_EQ(j["locus"], "pi:2^2");
  EXPECT_EQ(j["order"], "grevlex");
  EXPECT_EQ(j["var_order"], "paper-example");
  EXPECT_EQ(j["grfrob_text"], "s[4] + q*s[2,2]");
  EXPECT_EQ(SymFunc::from_json(j["grfrob"]), report.grfrob);
  EXPECT_EQ(j["degrees"][1]["dim"], 2);
  EXPECT_EQ(j["degrees"][1]["traces"]["1^4"], "2");
}

TEST(Pipeline, RejectsInhomogeneousGenerators) {
  auto v = Poly::variable(3, 1, 2);
  std::vector<Poly> gens{v * v - v};
  EXPECT_THROW(graded_character_of_ideal(gens, 3), std::invalid_argument);
}

TEST(Symmetrizer, Examples) {
  auto g = buchberger(gens_I(3), MonomialOrder::grevlex());
  auto x12 = Monomial::variable(VarId(1, 2));
  EXPECT_TRUE(symmetrizer_image(x12, 2, g).is_zero());
  auto gr = associated_graded(ideal_of_points(build_locus(Partition{2, 2, 2}), MonomialOrder::grevlex()));
  for (const auto& m : standard_monomials(gr).all()) {
    EXPECT_EQ(symmetrizer_image(m, 1, gr), gr.normal_form(m));
  }
  // eta_j f by hand for j = 2: f + (1 2).f.
  auto f = Poly::variable(6, 1, 3) * Poly::variable(6, 2, 4);
  auto swapped = f.relabel(Permutation({2, 1, 3, 4, 5, 6}));
  EXPECT_EQ(symmetrizer_image(f, 2, gr), gr.normal_form(f + swapped));
}

TEST(Symmetrizer, AnnihilationOnMatchings) {
  for (int n = 2; n <= 6; ++n) {
    auto g = buchberger(gens_I(n), MonomialOrder::grevlex());
    for (int d = 0; 2 * d <= n; ++d) {
      for (const auto& tau : matchings(n, d)) {
        auto m = matching_monomial(tau);
        for (int j = std::max(1, n - 2 * d + 1); j <= n; ++j) {
          EXPECT_TRUE(symmetrizer_image(m, j, g).is_zero()) << n << " " << d << " " << j;
        }
      }
    }
  }
}

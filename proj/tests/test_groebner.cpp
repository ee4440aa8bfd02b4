#include "oracles.hpp"
#include "orbh/groebner.hpp"
#include "orbh/loci.hpp"
#include "orbh/orbit_harmonics.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace orbh;

namespace {

// Checks every structural invariant of a computed basis.
void expect_valid(const GroebnerBasis& g) {
  auto report = check_s_pairs(g);
  EXPECT_TRUE(report.ok) << "S-pair " << report.failing->first << "," << report.failing->second;
  EXPECT_TRUE(is_reduced(g));
}

std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t width = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < width; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Poly x(int n, int i, int j) { return Poly::variable(n, i, j); }

}  // namespace

TEST(Buchberger, SingleUnivariate) {
  auto v = x(2, 1, 2);
  std::vector<Poly> gens{v * v - v};
  auto g = buchberger(gens, MonomialOrder::grevlex());
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.generators()[0], v * v - v);
  auto sm = standard_monomials(g);
  EXPECT_EQ(sm.size(), 2u);
  EXPECT_EQ(sm.hilbert_function(), (std::vector<std::size_t>{1, 1}));
  expect_valid(g);
}

TEST(Buchberger, IdealOfTwoPointsOnALine) {
  std::vector<std::vector<int>> pts{{0}, {1}};
  auto g = ideal_of_points(2, pts, MonomialOrder::grevlex());
  auto v = x(2, 1, 2);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.generators()[0], v * v - v);
}

TEST(Buchberger, IOfThreeIsTrivialQuotient) {
  auto gens = gens_I(3);
  auto g = buchberger(gens, MonomialOrder::grevlex());
  expect_valid(g);
  auto sm = standard_monomials(g);
  ASSERT_EQ(sm.size(), 1u);
  EXPECT_TRUE(sm.by_degree[0][0].is_one());
}

TEST(Buchberger, JOfFourMatchesLocusDimension) {
  auto gens = gens_J(4);
  auto g = buchberger(gens, MonomialOrder::grevlex());
  expect_valid(g);
  auto locus = build_locus(Partition{2, 2});
  auto want = oracle::graded_module(4, locus.points, 4);
  EXPECT_EQ(standard_monomials(g).hilbert_function(), want.hilbert);
  EXPECT_EQ(standard_monomials(g).size(), 3u);
}

TEST(Buchberger, RejectsEmptyAndHonoursBudget) {
  std::vector<Poly> none;
  EXPECT_THROW(buchberger(none, MonomialOrder::grevlex()), std::invalid_argument);
  auto gens = gens_J(6);
  BuchbergerOptions tight;
  tight.max_pairs = 2;
  EXPECT_THROW(buchberger(gens, MonomialOrder::grevlex(), tight), BudgetExceeded);
}

TEST(Buchberger, IdempotentOnReducedBases) {
  for (int n : {4, 5, 6}) {
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::grlex()}) {
      auto gens = gens_I(n);
      auto g = buchberger(gens, order);
      expect_valid(g);
      EXPECT_EQ(buchberger(g.generators(), order), g);
    }
  }
}

TEST(Buchberger, AgreesWithPointsAcrossOrders) {
  // Buchberger applied to the grevlex basis of a vanishing ideal, under lex,
  // must land on the lex basis computed straight from the points.
  for (const auto& lambda : {Partition{2, 2}, Partition{2, 1, 1}, Partition{3, 1}, Partition{2, 2, 1}}) {
    auto locus = build_locus(lambda);
    auto grev = ideal_of_points(locus, MonomialOrder::grevlex());
    for (auto order : {MonomialOrder::lex(), MonomialOrder(MonomialOrder::Kind::lex, true), MonomialOrder::grlex()}) {
      auto direct = ideal_of_points(locus, order);
      expect_valid(direct);
      EXPECT_EQ(buchberger(grev.generators(), order, {}, locus.n), direct) << lambda.to_string();
    }
  }
}

TEST(IdealOfPoints, VanishesAndCountsMatch) {
  std::vector<Locus> loci{build_locus(Partition{2, 2}), build_locus(Partition{2, 2, 2}),
                          build_locus(Partition{3, 3}), build_locus_pinm(3, 2),
                          build_locus_pinm(4, 3), build_locus_pinm(5, 3)};
  for (const auto& locus : loci) {
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::grlex()}) {
      auto g = ideal_of_points(locus, order);
      expect_valid(g);
      for (const auto& f : g.generators()) {
        for (const auto& p : locus.points) EXPECT_EQ(f.evaluate(p), 0) << locus.label;
      }
      auto sm = standard_monomials(g);
      EXPECT_EQ(sm.size(), locus.size()) << locus.label;
      // Standard monomials evaluate to a basis of functions on the points.
      std::vector<std::vector<Rational>> rows;
      for (const auto& m : sm.all()) {
        std::vector<Rational> row;
        auto f = Poly::from_monomial(locus.n, m);
        for (const auto& p : locus.points) row.push_back(f.evaluate(p));
        rows.push_back(std::move(row));
      }
      EXPECT_EQ(rank_of(rows), locus.size());
    }
  }
  EXPECT_EQ(standard_monomials(ideal_of_points(build_locus(Partition{2, 2}), MonomialOrder::grevlex())).size(), 3u);
  EXPECT_EQ(standard_monomials(ideal_of_points(build_locus_pinm(3, 2), MonomialOrder::grevlex())).size(), 4u);
}

TEST(IdealOfPoints, RejectsBadInput) {
  std::vector<std::vector<int>> dup{{1, 0, 0}, {1, 0, 0}};
  EXPECT_THROW(ideal_of_points(3, dup, MonomialOrder::grevlex()), std::invalid_argument);
  std::vector<std::vector<int>> short_pt{{1, 0}};
  EXPECT_THROW(ideal_of_points(3, short_pt, MonomialOrder::grevlex()), std::invalid_argument);
}

TEST(AssociatedGraded, HilbertFunctionsMatchOracle) {
  struct Case {
    Locus locus;
    std::vector<std::size_t> hilbert;
  };
  std::vector<Case> cases{{build_locus(Partition{2, 2}), {1, 2}}, {build_locus_pinm(3, 3), {1, 3, 1}}};
  for (auto& c : cases) {
    auto g = ideal_of_points(c.locus, MonomialOrder::grevlex());
    auto gr = associated_graded(g);
    expect_valid(gr);
    for (const auto& f : gr.generators()) EXPECT_TRUE(f.is_homogeneous());
    EXPECT_EQ(gr.leading_monomials(), g.leading_monomials());
    auto sm = standard_monomials(gr);
    EXPECT_EQ(sm.hilbert_function(), c.hilbert) << c.locus.label;
    EXPECT_EQ(sm.hilbert_function(), oracle::graded_module(c.locus.n, c.locus.points, 6).hilbert);
  }
  for (const auto& locus : {build_locus(Partition{2, 2, 2}), build_locus_pinm(4, 2), build_locus(Partition{3, 2})}) {
    auto gr = associated_graded(ideal_of_points(locus, MonomialOrder::grevlex()));
    EXPECT_EQ(standard_monomials(gr).hilbert_function(), oracle::graded_module(locus.n, locus.points, 8).hilbert)
        << locus.label;
  }
}

TEST(AssociatedGraded, HomogeneousInputIsFixedAndLexRejected) {
  auto g = buchberger(gens_J(5), MonomialOrder::grevlex());
  EXPECT_EQ(associated_graded(g), g);
  auto lex = ideal_of_points(build_locus(Partition{2, 2}), MonomialOrder::lex());
  EXPECT_THROW(associated_graded(lex), std::invalid_argument);
}

TEST(NormalForm, Properties) {
  auto locus = build_locus(Partition{2, 2, 2});
  auto gr = associated_graded(ideal_of_points(locus, MonomialOrder::grevlex()));
  for (const auto& f : gr.generators()) EXPECT_TRUE(gr.normal_form(f).is_zero());
  EXPECT_EQ(gr.normal_form(Poly::constant(6, 1)), Poly::constant(6, 1));
  std::mt19937 rng(9);
  auto vars = all_vars(6);
  auto random = [&] {
    std::vector<Poly::Term> ts;
    for (int k = 0; k < 4; ++k) {
      std::vector<VarId> vs;
      for (int d = 0; d < 1 + static_cast<int>(rng() % 3); ++d) vs.push_back(vars[rng() % vars.size()]);
      ts.emplace_back(Monomial::product(vs), Rational(static_cast<int>(rng() % 9) - 4));
    }
    return Poly::from_terms(6, ts);
  };
  for (int k = 0; k < 50; ++k) {
    auto f = random(), h = random();
    auto nf = gr.normal_form(f);
    for (const auto& [m, c] : nf.terms()) EXPECT_FALSE(gr.in_initial_ideal(m));
    EXPECT_TRUE(gr.contains(f - nf));
    EXPECT_EQ(gr.normal_form(f + Rational(3) * h), nf + Rational(3) * gr.normal_form(h));
    EXPECT_EQ(gr.normal_form(nf), nf);
  }
}

TEST(NormalForm, MatchingExchangeModuloJ4) {
  // Both matchings of [4] have the same normal form modulo gr I(Pi_{(2,2)}).
  auto gr = associated_graded(ideal_of_points(build_locus(Partition{2, 2}), MonomialOrder::grevlex()));
  auto a = gr.normal_form(x(4, 1, 2) * x(4, 3, 4));
  auto b = gr.normal_form(x(4, 1, 3) * x(4, 2, 4));
  EXPECT_EQ(a, b);
  auto j4 = buchberger(gens_J(4), MonomialOrder::grevlex());
  EXPECT_TRUE(j4.contains(x(4, 1, 2) * x(4, 3, 4) - x(4, 1, 3) * x(4, 2, 4)));
}

TEST(Containment, ReduceIdealInto) {
  auto gr22 = associated_graded(ideal_of_points(build_locus(Partition{2, 2}), MonomialOrder::grevlex()));
  EXPECT_TRUE(reduce_ideal_into(gr22.generators(), gr22));
  EXPECT_TRUE(reduce_ideal_into(gens_gr_pi_2a(2), gr22));
  auto gr33 = associated_graded(ideal_of_points(build_locus(Partition{3, 3}), MonomialOrder::grevlex()));
  EXPECT_TRUE(reduce_ideal_into(gens_gr_pi_2a(3), gr33));
  auto gr222 = associated_graded(ideal_of_points(build_locus(Partition{2, 2, 2}), MonomialOrder::grevlex()));
  EXPECT_FALSE(reduce_ideal_into(gr33.generators(), gr222));
  EXPECT_TRUE(first_nonreducing(gr33.generators(), gr222).has_value());
  EXPECT_FALSE(first_nonreducing(gr222.generators(), gr33).has_value());
}

TEST(StandardMonomials, LexExampleOnPi32) {
  auto lex = MonomialOrder::lex();
  auto g = ideal_of_points(build_locus_pinm(3, 2), MonomialOrder::grevlex());
  auto gr = buchberger(associated_graded(g).generators(), lex, {}, 3);
  auto sm = standard_monomials(gr).all();
  std::set<std::string> got;
  for (const auto& m : sm) got.insert(m.to_string());
  EXPECT_EQ(got, (std::set<std::string>{"1", "x{1,2}", "x{1,3}", "x{2,3}"}));
}

TEST(StandardMonomials, DegreeCapAndBudget) {
  std::vector<Poly> gens{x(3, 1, 2) * x(3, 1, 2)};
  auto g = buchberger(gens, MonomialOrder::grevlex(), {}, 3);
  EXPECT_THROW(standard_monomials(g), std::invalid_argument);
  auto capped = standard_monomials(g, 2);
  EXPECT_EQ(capped.hilbert_function(), (std::vector<std::size_t>{1, 3, 5}));
  EXPECT_THROW(standard_monomials(g, 30, 100), BudgetExceeded);
}

TEST(GroebnerText, RoundTrip) {
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder(MonomialOrder::Kind::grlex, true)}) {
    auto g = ideal_of_points(build_locus_pinm(4, 2), order);
    EXPECT_EQ(GroebnerBasis::from_text(g.to_text()), g);
  }
  EXPECT_THROW(GroebnerBasis::from_text("not a basis"), std::invalid_argument);
}

TEST(GroebnerText, GoldenFiles) {
  struct Golden {
    std::string file;
    GroebnerBasis basis;
  };
  std::vector<Golden> cases{
      {"gr_pi_2_2_grevlex.txt", associated_graded(ideal_of_points(build_locus(Partition{2, 2}), MonomialOrder::grevlex()))},
      {"gr_pi_2_2_2_grevlex.txt",
       associated_graded(ideal_of_points(build_locus(Partition{2, 2, 2}), MonomialOrder::grevlex()))},
      {"gr_pi_3_3_grevlex.txt", associated_graded(ideal_of_points(build_locus(Partition{3, 3}), MonomialOrder::grevlex()))},
      {"gr_pinm_4_3_grevlex.txt", associated_graded(ideal_of_points(build_locus_pinm(4, 3), MonomialOrder::grevlex()))},
      {"I_pinm_3_2_lex.txt", ideal_of_points(build_locus_pinm(3, 2), MonomialOrder::lex())},
      {"J_5_grevlex.txt", buchberger(gens_J(5), MonomialOrder::grevlex())},
  };
  const bool update = std::getenv("ORBH_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : cases) {
    const std::string path = std::string(ORBH_GOLDEN_DIR) + "/" + c.file;
    if (update) {
      std::ofstream(path) << c.basis.to_text();
      continue;
    }
    const auto text = read_file(path);
    ASSERT_FALSE(text.empty()) << path;
    EXPECT_EQ(c.basis.to_text(), text) << c.file;
    auto stored = GroebnerBasis::from_text(text);
    expect_valid(stored);
    EXPECT_EQ(stored, c.basis);
  }
}

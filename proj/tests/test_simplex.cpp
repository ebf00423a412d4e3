#include <gtest/gtest.h>

#include "turan/formats.hpp"
#include "turan/simplex.hpp"

using namespace turan;

namespace {

WeightedGraph paw() { return WeightedGraph::unweighted(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

}  // namespace

TEST(MotzkinStraus, PlainOptimumIsOneMinusInverseOmega) {
  EXPECT_NEAR(maximize_form(parse_graph6("Dhc"), WeightScheme::Plain).value, 0.5, 1e-9);
  EXPECT_NEAR(maximize_form(parse_graph6("Bw"), WeightScheme::Plain).value, 2.0 / 3.0, 1e-9);
  EXPECT_NEAR(maximize_form(parse_graph6("IheA@GUAo"), WeightScheme::Plain).value, 0.5, 1e-9);
  EXPECT_NEAR(maximize_form(paw(), WeightScheme::Plain).value, 2.0 / 3.0, 1e-9);
}

TEST(MotzkinStraus, WeightedSchemesReachOne) {
  EXPECT_NEAR(maximize_form(paw(), WeightScheme::Vertex).value, 1.0, 1e-9);
  EXPECT_NEAR(maximize_form(paw(), WeightScheme::Edge).value, 1.0, 1e-9);
  EXPECT_NEAR(maximize_form(parse_graph6("EFz_"), WeightScheme::Edge).value, 1.0, 1e-9);  // K_{3,3}
}

TEST(MotzkinStraus, VertexSchemeRejectsIsolatedVertices) {
  EXPECT_THROW(maximize_form(WeightedGraph::unweighted(3, {{0, 1}}), WeightScheme::Vertex), PreconditionError);
  EXPECT_NO_THROW(maximize_form(WeightedGraph::unweighted(3, {{0, 1}}), WeightScheme::Edge));
}

TEST(MotzkinStraus, EdgelessGraphHasValueZero) {
  const auto best = maximize_form(WeightedGraph(3, {}), WeightScheme::Plain);
  EXPECT_EQ(best.value, 0.0);
  EXPECT_EQ(best.point, (std::vector<double>{1.0, 0.0, 0.0}));
}

TEST(MotzkinStraus, NegativeCoefficientsAreRejected) {
  EXPECT_THROW(maximize_form(WeightedGraph(2, {{0, 1, -1.0}}), WeightScheme::Plain), PreconditionError);
}

TEST(MotzkinStraus, ResultIsASimplexPointWithMatchingValue) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_gnp(9, 0.5, seed);
    if (g.size() == 0) continue;
    ReplicatorOptions opt;
    opt.seed = seed;
    const auto best = maximize_form(g, WeightScheme::Edge, opt);
    EXPECT_NO_THROW(require_simplex_point(best.point, g.order()));
    EXPECT_NEAR(form_value(g, WeightScheme::Edge, best.point), best.value, 1e-12);
    EXPECT_EQ(best.support, support_of(best.point));
    EXPECT_EQ(best.support_minimality, "heuristic");
  }
}

TEST(MotzkinStraus, DeterministicForFixedSeed) {
  const auto g = random_gnp(10, 0.5, 4);
  ReplicatorOptions opt;
  opt.seed = 99;
  const auto a = maximize_form(g, WeightScheme::Plain, opt);
  const auto b = maximize_form(g, WeightScheme::Plain, opt);
  EXPECT_EQ(a.point, b.point);
  EXPECT_EQ(a.value, b.value);
}

TEST(MotzkinStraus, RandomSimplexPointsStayBelowCeiling) {
  SplitMix64 rng(1, stream_tag::kDirichlet);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = strip_isolated(random_gnp(8, 0.5, seed)).graph;
    if (g.size() == 0) continue;
    const auto mv = form_matrix(g, WeightScheme::Vertex);
    const auto me = form_matrix(g, WeightScheme::Edge);
    for (int k = 0; k < 200; ++k) {
      const auto x = dirichlet_ones(g.order(), rng);
      EXPECT_LE(quadratic_form(mv, x), 1.0 + 1e-9);
      EXPECT_LE(quadratic_form(me, x), 1.0 + 1e-9);
    }
  }
}

TEST(MotzkinStraus, FormMatrixEntries) {
  const auto p = paw();
  const auto mv = form_matrix(p, WeightScheme::Vertex);
  const auto me = form_matrix(p, WeightScheme::Edge);
  // Edge 0-3: cl(0) = 3, cl(3) = 2, cl(03) = 2.
  EXPECT_DOUBLE_EQ(mv(0, 3), 0.5 * (1.5 + 2.0));
  EXPECT_DOUBLE_EQ(me(0, 3), 2.0);
  EXPECT_DOUBLE_EQ(me(1, 2), 1.5);
  EXPECT_DOUBLE_EQ(me(1, 3), 0.0);
}

TEST(EqualityStructure, UniformOnTwoPartsOfC5Fails) {
  // Uniform weight on the edge {0,1} of C5: complete bipartite K_{1,1}, masses ½.
  const auto c5 = parse_graph6("Dhc");
  EXPECT_TRUE(check_equality_structure(c5, {0.5, 0.5, 0.0, 0.0, 0.0}).ok);
  // Uniform on all five vertices: support is C5, not complete multipartite.
  const auto r = check_equality_structure(c5, std::vector<double>(5, 0.2));
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.diagnostic.find("multipartite"), std::string::npos);
}

TEST(EqualityStructure, UnequalMassesFail) {
  const auto k3 = parse_graph6("Bw");
  EXPECT_TRUE(check_equality_structure(k3, {1.0 / 3, 1.0 / 3, 1.0 / 3}).ok);
  EXPECT_FALSE(check_equality_structure(k3, {0.5, 0.25, 0.25}).ok);
  EXPECT_THROW(check_equality_structure(k3, {0.5, 0.5, 0.5}), PreconditionError);
}

TEST(EqualityStructure, PlainOptimaHaveTheMotzkinStrausStructure) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_gnp(8, 0.5, seed);
    if (g.size() == 0) continue;
    const auto best = maximize_form(g, WeightScheme::Plain);
    EXPECT_TRUE(check_equality_structure(g, best.point).ok) << to_graph6(g);
  }
}

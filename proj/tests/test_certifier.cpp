#include <gtest/gtest.h>

#include "turan/certifier.hpp"
#include "turan/formats.hpp"
#include "turan/random.hpp"

using namespace turan;

namespace {

const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);

// Parts {0}, {1, 2}, {3, 4}.
WeightedGraph example1() {
  return WeightedGraph(5, {{0, 1, 1.0},
                           {0, 2, s2},
                           {0, 3, s6 / 2},
                           {0, 4, s6 / 2},
                           {1, 3, s2 / 2},
                           {1, 4, s2 / 2},
                           {2, 3, 1.0},
                           {2, 4, 1.0}});
}

ExtremalCertificate explicit_witness() {
  const double q = std::pow(3.0, 0.25);
  ExtremalCertificate c;
  c.partition.parts = {{0}, {1, 2}, {3, 4}};
  c.vertices = {0, 1, 2, 3, 4};
  c.w = {q, q * s3 / 3, q * s6 / 3, q * s2 / 2, q * s2 / 2};
  return c;
}

double part_norm(const ExtremalCertificate& c, const std::vector<Vertex>& part) {
  double s = 0.0;
  for (Vertex v : part) {
    const auto k = std::find(c.vertices.begin(), c.vertices.end(), v) - c.vertices.begin();
    s += c.w[k] * c.w[k];
  }
  return s;
}

WeightedGraph k_ab(int a, int b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
  return WeightedGraph::unweighted(a + b, e);
}

}  // namespace

TEST(Certifier, ReconstructsTheExample) {
  const auto g = example1();
  const auto main = bound_main_weighted(analyze(g));
  ASSERT_TRUE(main.equality);
  const auto out = certify_equality(g, main);
  ASSERT_TRUE(out.accepted()) << out.stage << ": " << out.diagnostic;
  const auto& c = *out.certificate;
  EXPECT_EQ(c.r(), 3);
  EXPECT_EQ(c.sign, 1);
  EXPECT_NEAR(c.c, 3 * s3, 1e-10);
  for (const auto& p : c.partition.parts) EXPECT_NEAR(part_norm(c, p), s3, 1e-8);
  double w2 = 0.0;
  for (double x : c.w) w2 += x * x;
  EXPECT_NEAR(w2, 3 * s3, 1e-9);
  // The reconstructed w is the explicit witness.
  const auto expected = explicit_witness();
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(c.w[i], expected.w[i], 1e-9);
}

TEST(Certifier, VerifiesTheExplicitWitness) {
  const auto res = verify_certificate(example1(), explicit_witness());
  EXPECT_LE(res.structural, 1e-9);
  EXPECT_LE(res.norm, 1e-9);
}

TEST(Certifier, DetectsAPerturbedWitness) {
  auto c = explicit_witness();
  c.w[1] *= 1.01;
  EXPECT_GT(verify_certificate(example1(), c).structural, 1e-3);
}

TEST(Certifier, DimensionMismatchThrows) {
  auto c = explicit_witness();
  c.w.pop_back();
  EXPECT_THROW(verify_certificate(example1(), c), PreconditionError);
  auto d = explicit_witness();
  d.partition.parts = {{0}, {1, 2}, {3}};
  EXPECT_THROW(verify_certificate(example1(), d), PreconditionError);
}

TEST(Certifier, K3WitnessIsAllOnes) {
  const auto g = parse_graph6("Bw");
  const auto out = reconstruct_certificate(g);
  ASSERT_TRUE(out.accepted());
  EXPECT_NEAR(out.certificate->c, 3.0, 1e-12);
  for (double x : out.certificate->w) EXPECT_NEAR(x, 1.0, 1e-12);
}

TEST(Certifier, UsageErrorWithoutEquality) {
  const auto c5 = parse_graph6("Dhc");
  const auto main = bound_main_weighted(analyze(c5));
  EXPECT_FALSE(main.equality);
  EXPECT_THROW(certify_equality(c5, main), UsageError);
  EXPECT_THROW(certify_equality(c5, bound_local_edge(analyze(c5))), UsageError);
}

TEST(Certifier, RejectionStages) {
  EXPECT_EQ(reconstruct_certificate(WeightedGraph(3, {})).stage, "strip");
  EXPECT_EQ(reconstruct_certificate(WeightedGraph(3, {{0, 1, 1.0}, {1, 2, -1.0}})).stage, "sign");
  EXPECT_EQ(reconstruct_certificate(parse_graph6("Dhc")).stage, "multipartite");
  // Complete 3-partite with unbalanced weights misses condition (1).
  const auto k3w = randomize_weights(parse_graph6("Bw"), 0.1, 2.0, false, 7);
  const auto out = reconstruct_certificate(k3w);
  EXPECT_EQ(out.stage, "residual");
  EXPECT_FALSE(bound_main_weighted(analyze(k3w)).equality);
}

TEST(Certifier, NegatedGraphGetsNegativeSign) {
  const auto g = example1().scaled(-1.0);
  ASSERT_TRUE(bound_main_weighted(analyze(g)).equality);
  const auto out = reconstruct_certificate(g);
  ASSERT_TRUE(out.accepted());
  EXPECT_EQ(out.certificate->sign, -1);
}

TEST(Certifier, IsolatedVerticesKeepOriginalLabels) {
  // Example 1 relabelled onto 0, 2, 4, 5, 7 of an 8-vertex graph.
  const std::vector<Vertex> map = {0, 2, 4, 5, 7};
  const auto base = example1();
  std::vector<Edge> edges;
  for (const auto& e : base.edges()) edges.push_back({map[e.u], map[e.v], e.w});
  const WeightedGraph g(8, edges);
  const auto out = reconstruct_certificate(g);
  ASSERT_TRUE(out.accepted());
  EXPECT_EQ(out.certificate->vertices, map);
  EXPECT_TRUE(out.certificate->partition.covers(map));
  const auto res = verify_certificate(g, *out.certificate);
  EXPECT_LE(res.structural, 1e-9);
}

TEST(Certifier, StarsWithAnyPositiveWeightsAreExtremal) {
  const WeightedGraph star(4, {{0, 1, 0.3}, {0, 2, 1.7}, {0, 3, 2.0}});
  EXPECT_TRUE(bound_main_weighted(analyze(star)).equality);
  EXPECT_TRUE(reconstruct_certificate(star).accepted());
}

TEST(Classifier, Verdicts) {
  EXPECT_EQ(classify_unweighted_equality(WeightedGraph(4, {})).kind, ExtremalKind::Edgeless);
  EXPECT_EQ(classify_unweighted_equality(k_ab(2, 3)).kind, ExtremalKind::CompleteBipartite);
  EXPECT_EQ(classify_unweighted_equality(parse_graph6("Bw")).kind, ExtremalKind::CompleteRegularMultipartite);
  EXPECT_EQ(classify_unweighted_equality(parse_graph6("Dhc")).kind, ExtremalKind::NotExtremal);
  // K4 minus an edge: complete 3-partite with parts 1, 1, 2.
  const auto d = WeightedGraph::unweighted(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const auto c = classify_unweighted_equality(d);
  EXPECT_EQ(c.kind, ExtremalKind::NotExtremal);
  EXPECT_TRUE(c.complete_multipartite);
  EXPECT_EQ(c.r, 3);
  EXPECT_FALSE(c.equal_parts);
}

TEST(Classifier, IsolatedVertices) {
  const auto g = WeightedGraph::unweighted(4, {{0, 1}});
  const auto c = classify_unweighted_equality(g);
  EXPECT_EQ(c.kind, ExtremalKind::CompleteBipartite);
  EXPECT_EQ(c.isolated, 2);
  EXPECT_TRUE(c.regular_complete_multipartite());
  EXPECT_FALSE(c.adak_chandran_extremal());
  ASSERT_TRUE(c.parts);
  EXPECT_TRUE(c.parts->covers({0, 1}));
}

TEST(Switching, MixedSignTreeBecomesOneSigned) {
  const WeightedGraph path(3, {{0, 1, 0.5}, {1, 2, -1.5}});
  EXPECT_TRUE(bound_main_weighted(analyze(path)).equality);
  EXPECT_EQ(reconstruct_certificate(path).stage, "sign");
  const auto s = switch_to_one_sign(path);
  ASSERT_TRUE(s);
  for (const auto& e : s->edges()) EXPECT_GT(e.w, 0.0);
  EXPECT_NEAR(spectral_radius(*s), spectral_radius(path), 1e-12);
  EXPECT_TRUE(reconstruct_certificate(*s).accepted());
}

TEST(Switching, TriangleWithOneNegativeEdgeSwitchesToNegative) {
  const WeightedGraph t(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, -1.0}});
  const auto s = switch_to_one_sign(t);
  ASSERT_TRUE(s);
  for (const auto& e : s->edges()) EXPECT_LT(e.w, 0.0);
  const auto out = reconstruct_certificate(*s);
  ASSERT_TRUE(out.accepted());
  EXPECT_EQ(out.certificate->sign, -1);
}

TEST(Switching, UnbalancedK4HasNoSwitching) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) e.push_back({u, v, (u == 0 && v == 1) ? -1.0 : 1.0});
  const WeightedGraph g(4, e);
  EXPECT_FALSE(switch_to_one_sign(g));
  EXPECT_FALSE(bound_main_weighted(analyze(g)).equality);
}

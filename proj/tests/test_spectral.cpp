#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "turan/formats.hpp"
#include "turan/random.hpp"
#include "turan/spectral.hpp"

using namespace turan;

namespace {

Eigen::VectorXd eigen_oracle(const Matrix& m) {
  Eigen::MatrixXd a(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) a(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();  // ascending
}

}  // namespace

TEST(Jacobi, AgreesWithEigenOnRandomWeightedGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 20);
    auto g = random_gnp(n, 0.5, seed);
    if (seed % 2) g = randomize_weights(g, 0.1, 2.0, true, seed);
    const auto m = Matrix::adjacency(g);
    const auto s = eigen_sym(m);
    const auto ref = eigen_oracle(m);
    ASSERT_EQ(static_cast<int>(s.eigenvalues.size()), n);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(s.eigenvalues[i], ref[n - 1 - i], 1e-10 * std::max(1.0, m.frobenius()));
    EXPECT_NEAR(s.spectral_radius, std::max(std::abs(ref[0]), std::abs(ref[n - 1])), 1e-10 * std::max(1.0, m.frobenius()));
    EXPECT_LE(s.frobenius_trace_residual(), 1e-9);
    if (n > 0 && s.spectral_radius > 0) {
      EXPECT_LE(eigen_residual(m, s.principal_vector, s.principal_eigenvalue), 1e-9 * std::max(1.0, s.spectral_radius));
    }
  }
}

TEST(Jacobi, ClosedForms) {
  EXPECT_NEAR(spectral_radius(parse_graph6("Bw")), 2.0, 1e-12);
  EXPECT_NEAR(spectral_radius(parse_graph6("IheA@GUAo")), 3.0, 1e-12);  // Petersen
  EXPECT_NEAR(spectral_radius(parse_graph6("Dhc")), 2.0, 1e-12);        // C5
  std::vector<std::pair<Vertex, Vertex>> k23;
  for (int u = 0; u < 2; ++u)
    for (int v = 2; v < 5; ++v) k23.emplace_back(u, v);
  EXPECT_NEAR(spectral_radius(WeightedGraph::unweighted(5, k23)), std::sqrt(6.0), 1e-12);
  EXPECT_EQ(spectral_radius(WeightedGraph(4, {})), 0.0);
  EXPECT_EQ(spectral_radius(WeightedGraph(0, {})), 0.0);
}

TEST(Jacobi, PawSpectralRadius) {
  // Largest root of x^4 - 4x^2 - 2x + 1, the paw's characteristic polynomial.
  const auto paw = WeightedGraph::unweighted(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  const double lambda = spectral_radius(paw);
  EXPECT_NEAR(lambda, 2.1700865, 1e-7);
  EXPECT_NEAR(std::pow(lambda, 4) - 4 * lambda * lambda - 2 * lambda + 1, 0.0, 1e-11);
}

TEST(Jacobi, NegativeDominantEigenvalue) {
  // -K3 has eigenvalues 1, 1, -2; the radius is 2 and the principal eigenvalue -2.
  const auto g = parse_graph6("Bw").scaled(-1.0);
  const auto s = spectrum(g);
  EXPECT_NEAR(s.spectral_radius, 2.0, 1e-12);
  EXPECT_NEAR(s.principal_eigenvalue, -2.0, 1e-12);
}

TEST(Jacobi, RadiusIsScaleAndSignCovariant) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = randomize_weights(random_gnp(9, 0.5, seed), 0.1, 2.0, true, seed);
    const double base = spectral_radius(g);
    EXPECT_NEAR(spectral_radius(g.scaled(-2.5)), 2.5 * base, 1e-10 * std::max(1.0, base));
  }
}

TEST(Jacobi, RayleighQuotientNeverExceedsRadius) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = randomize_weights(random_gnp(10, 0.5, seed), 0.1, 2.0, true, seed);
    const auto m = Matrix::adjacency(g);
    const double lambda = spectral_radius(g);
    SplitMix64 rng(seed, stream_tag::kDirichlet);
    for (int k = 0; k < 20; ++k) {
      std::vector<double> x(10);
      double nn = 0.0;
      for (double& xi : x) {
        xi = rng.uniform() - 0.5;
        nn += xi * xi;
      }
      const auto y = m.apply(x);
      double q = 0.0;
      for (int i = 0; i < 10; ++i) q += x[i] * y[i];
      EXPECT_LE(std::abs(q) / nn, lambda + 1e-12);
    }
  }
}

TEST(Jacobi, RejectsNonSymmetricAndNonFinite) {
  Matrix m(2);
  m(0, 1) = 1.0;
  EXPECT_THROW(eigen_sym(m), PreconditionError);
  Matrix bad(2);
  bad(0, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(eigen_sym(bad), PreconditionError);
}

TEST(Perron, NonnegativeEigenvectorOfBipartiteGraph) {
  // K_{1,3}: Perron vector (√3, 1, 1, 1)/√6 and λ = √3; bipartite, so -λ is
  // also an eigenvalue and unshifted power iteration would oscillate.
  const auto star = WeightedGraph::unweighted(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto m = Matrix::adjacency(star);
  const auto x = perron_vector(m, std::sqrt(3.0));
  EXPECT_NEAR(x[0], std::sqrt(3.0) / std::sqrt(6.0), 1e-12);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(x[i], 1.0 / std::sqrt(6.0), 1e-12);
  EXPECT_THROW(perron_vector(Matrix::adjacency(star.scaled(-1.0)), 1.0), PreconditionError);
}

#pragma once

// Portable seeded randomness.
//
// Every random quantity comes from SplitMix64 (Steele, Lea & Flood 2014):
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// A stream is identified by (seed, tag): its initial state is
// mix64(seed ^ tag), where mix64 is the finaliser above applied to the value
// itself. uniform() = (next() >> 11) * 2^-53, in [0, 1). Draws are consumed in
// a fixed documented order, so outputs are bit-identical on every platform.

#include <cmath>
#include <cstdint>

#include "turan/graph.hpp"

namespace turan {

namespace stream_tag {
inline constexpr std::uint64_t kEdges = 0x6564676573000001ULL;
inline constexpr std::uint64_t kMagnitudes = 0x6d61676e69000002ULL;
inline constexpr std::uint64_t kSigns = 0x7369676e73000003ULL;
inline constexpr std::uint64_t kDirichlet = 0x6469726963000004ULL;
inline constexpr std::uint64_t kCorpus = 0x636f727075000005ULL;
}  // namespace stream_tag

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
public:
  SplitMix64(std::uint64_t seed, std::uint64_t tag) : state_(mix64(seed ^ tag)) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Exp(1) via inversion; 1 - u lies in (0, 1].
  double exponential() { return -std::log(1.0 - uniform()); }

private:
  std::uint64_t state_;
};

/// Erdős–Rényi G(n, p) with unit weights. Pairs are visited in (u, v)
/// lexicographic order with u < v, one draw each; a pair is an edge iff its
/// draw is < p.
inline WeightedGraph random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("random_gnp: n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("random_gnp: p must lie in [0, 1]");
  SplitMix64 rng(seed, stream_tag::kEdges);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.push_back({u, v, 1.0});
  return WeightedGraph(n, std::move(edges));
}

/// Magnitude low + (high - low) * u per edge in edge order; when `signed_weights`,
/// an independent sign stream makes each weight negative iff its draw is < 1/2.
/// Magnitudes therefore do not depend on `signed_weights`.
inline WeightedGraph randomize_weights(const WeightedGraph& g, double low, double high, bool signed_weights,
                                       std::uint64_t seed) {
  if (!(low > 0.0) || !(high >= low)) throw PreconditionError("randomize_weights: need 0 < low <= high");
  SplitMix64 magnitudes(seed, stream_tag::kMagnitudes);
  SplitMix64 signs(seed, stream_tag::kSigns);
  return g.reweighted([&](const Edge&) {
    const double mag = low + (high - low) * magnitudes.uniform();
    return signed_weights && signs.uniform() < 0.5 ? -mag : mag;
  });
}

/// Dirichlet(1, ..., 1) sample of dimension n.
inline std::vector<double> dirichlet_ones(int n, SplitMix64& rng) {
  std::vector<double> x(static_cast<std::size_t>(n));
  double total = 0.0;
  for (double& xi : x) total += (xi = rng.exponential());
  for (double& xi : x) xi /= total;
  return x;
}

}  // namespace turan

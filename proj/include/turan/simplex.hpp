#pragma once

// Quadratic forms x -> xᵀ(W∘A)x over the standard simplex and the
// Motzkin–Straus equality structure of their maximisers.

#include <cassert>
#include <cstdint>
#include <string>

#include "turan/clique.hpp"
#include "turan/random.hpp"
#include "turan/spectral.hpp"

namespace turan {

enum class WeightScheme { Plain, Vertex, Edge };

inline std::string to_string(WeightScheme s) {
  switch (s) {
    case WeightScheme::Plain: return "plain";
    case WeightScheme::Vertex: return "vertex";
    case WeightScheme::Edge: return "edge";
  }
  return "?";
}

inline std::optional<WeightScheme> scheme_from_string(const std::string& s) {
  if (s == "plain") return WeightScheme::Plain;
  if (s == "vertex") return WeightScheme::Vertex;
  if (s == "edge") return WeightScheme::Edge;
  return std::nullopt;
}

inline constexpr double kSupportThreshold = 1e-10;

/// Symmetric coefficient matrix M with form value xᵀMx:
///   Plain  M = A(G) (weighted),
///   Vertex M_ij = ½(cl(i)/(cl(i)−1) + cl(j)/(cl(j)−1)) on edges,
///   Edge   M_ij = cl(ij)/(cl(ij)−1) on edges.
/// Vertex and Edge use structure only.
inline Matrix form_matrix(const WeightedGraph& g, WeightScheme scheme, const CliqueProfile& profile) {
  const int n = g.order();
  Matrix m(n);
  switch (scheme) {
    case WeightScheme::Plain:
      m = Matrix::adjacency(g);
      break;
    case WeightScheme::Vertex: {
      if (!isolated_vertices(g).empty())
        throw PreconditionError("vertex scheme: W(G) is undefined at isolated vertices");
      auto ratio = [&](Vertex v) { return double(profile.cl_v[v]) / (profile.cl_v[v] - 1); };
      for (const auto& e : g.edges()) m(e.u, e.v) = m(e.v, e.u) = 0.5 * (ratio(e.u) + ratio(e.v));
      break;
    }
    case WeightScheme::Edge:
      for (const auto& ec : profile.cl_e) m(ec.u, ec.v) = m(ec.v, ec.u) = double(ec.cl) / (ec.cl - 1);
      break;
  }
  return m;
}

inline Matrix form_matrix(const WeightedGraph& g, WeightScheme scheme) {
  return form_matrix(g, scheme, clique_profile(g));
}

inline double quadratic_form(const Matrix& m, const std::vector<double>& x) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i) {
    if (x[i] == 0.0) continue;
    double row = 0.0;
    for (int j = 0; j < m.dim(); ++j) row += m(i, j) * x[j];
    s += x[i] * row;
  }
  return s;
}

inline void require_simplex_point(const std::vector<double>& x, int n) {
  if (static_cast<int>(x.size()) != n) throw PreconditionError("simplex point has wrong dimension");
  double total = 0.0;
  for (double xi : x) {
    if (!(xi >= 0.0)) throw PreconditionError("simplex point has a negative entry");
    total += xi;
  }
  if (std::abs(total - 1.0) > 1e-9) throw PreconditionError("simplex point does not sum to 1");
}

inline double form_value(const WeightedGraph& g, WeightScheme scheme, const std::vector<double>& x) {
  require_simplex_point(x, g.order());
  return quadratic_form(form_matrix(g, scheme), x);
}

inline std::vector<Vertex> support_of(const std::vector<double>& x) {
  std::vector<Vertex> s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > kSupportThreshold) s.push_back(static_cast<Vertex>(i));
  return s;
}

struct SimplexOptimum {
  std::vector<double> point;
  double value = 0.0;
  std::vector<Vertex> support;
  std::string support_minimality = "heuristic";
};

struct ReplicatorOptions {
  int restarts = 16;
  double tol = 1e-12;
  std::uint64_t seed = 0;
  int max_iterations = 100000;
};

namespace detail {

// x_i <- x_i (Mx)_i / xᵀMx until the largest coordinate move is <= tol.
// For symmetric nonnegative M every step is an ascent step.
inline double replicate(const Matrix& m, std::vector<double>& x, const ReplicatorOptions& opt) {
  const int n = m.dim();
  double value = quadratic_form(m, x);
  for (int it = 0; it < opt.max_iterations && value > 0.0; ++it) {
    auto g = m.apply(x);
    double change = 0.0;
    for (int i = 0; i < n; ++i) {
      const double next = x[i] * g[i] / value;
      change = std::max(change, std::abs(next - x[i]));
      x[i] = next;
    }
    const double next_value = quadratic_form(m, x);
    assert(next_value >= value - 1e-12 * std::max(1.0, std::abs(value)));
    value = next_value;
    if (change <= opt.tol) break;
  }
  return value;
}

inline bool lexicographically_smaller(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/// Maximises xᵀMx over the simplex by replicator dynamics from the uniform
/// point and `restarts - 1` Dirichlet-perturbed starts, each followed by greedy
/// support shrinking. The uniform point on a maximum clique is always scored
/// and kept as a floor. Ties go to the lexicographically smallest support.
inline SimplexOptimum maximize_form(const WeightedGraph& g, WeightScheme scheme, const ReplicatorOptions& opt = {}) {
  const int n = g.order();
  SimplexOptimum best;
  if (n == 0) return best;
  best.point.assign(static_cast<std::size_t>(n), 0.0);
  best.point[0] = 1.0;
  best.support = {0};
  if (g.size() == 0) return best;

  const auto profile = clique_profile(g);
  const Matrix m = form_matrix(g, scheme, profile);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) < 0.0) throw PreconditionError("maximize_form: coefficient matrix has a negative entry");

  auto offer = [&](std::vector<double> x, double value) {
    auto supp = support_of(x);
    const double tie = 1e-12 * std::max(1.0, std::abs(best.value));
    if (value > best.value + tie ||
        (std::abs(value - best.value) <= tie && detail::lexicographically_smaller(supp, best.support))) {
      best.point = std::move(x);
      best.value = value;
      best.support = std::move(supp);
    }
  };

  {
    std::vector<double> floor(static_cast<std::size_t>(n), 0.0);
    const auto k = max_clique(g);
    for (Vertex v : k) floor[v] = 1.0 / static_cast<double>(k.size());
    best.point = floor;
    best.value = quadratic_form(m, floor);
    best.support = support_of(floor);
  }

  SplitMix64 rng(opt.seed, stream_tag::kDirichlet);
  const int runs = std::max(1, opt.restarts);
  for (int r = 0; r < runs; ++r) {
    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / n);
    if (r > 0) {
      auto d = dirichlet_ones(n, rng);
      for (int i = 0; i < n; ++i) x[i] = 0.5 * x[i] + 0.5 * d[i];
    }
    double value = detail::replicate(m, x, opt);

    // Greedy support shrinking: drop the smallest support entry, re-run, keep
    // the smaller support while the value holds.
    for (;;) {
      auto supp = support_of(x);
      if (supp.size() <= 1) break;
      Vertex smallest = supp.front();
      for (Vertex v : supp)
        if (x[v] < x[smallest]) smallest = v;
      std::vector<double> y = x;
      y[smallest] = 0.0;
      double total = 0.0;
      for (double& yi : y) {
        if (yi <= kSupportThreshold) yi = 0.0;
        total += yi;
      }
      for (double& yi : y) yi /= total;
      double shrunk = detail::replicate(m, y, opt);
      if (shrunk < value - std::max(opt.tol, 1e-12 * std::abs(value))) break;
      x = std::move(y);
      value = shrunk;
    }
    offer(std::move(x), value);
  }
  return best;
}

struct StructureCheck {
  bool ok = false;
  std::string diagnostic;
  std::optional<Partition> parts;
};

/// True iff G[supp(x)] is complete ω(G)-partite with every part carrying
/// mass 1/ω within `tol`.
inline StructureCheck check_equality_structure(const WeightedGraph& g, const std::vector<double>& x,
                                               double tol = 1e-8) {
  require_simplex_point(x, g.order());
  StructureCheck out;
  const int omega = clique_number(g);
  const auto supp = support_of(x);
  auto parts = multipartite_parts(g, supp);
  if (!parts) {
    out.diagnostic = "support does not induce a complete multipartite graph";
    return out;
  }
  out.parts = parts;
  if (parts->count() != omega) {
    out.diagnostic = "support induces a complete " + std::to_string(parts->count()) + "-partite graph but omega = " +
                     std::to_string(omega);
    return out;
  }
  for (const auto& part : parts->parts) {
    double mass = 0.0;
    for (Vertex v : part) mass += x[v];
    if (std::abs(mass - 1.0 / omega) > tol) {
      out.diagnostic = "part containing vertex " + std::to_string(part.front()) + " has mass " + std::to_string(mass) +
                       ", expected 1/" + std::to_string(omega);
      return out;
    }
  }
  out.ok = true;
  out.diagnostic = "complete " + std::to_string(omega) + "-partite support with equal part masses";
  return out;
}

}  // namespace turan

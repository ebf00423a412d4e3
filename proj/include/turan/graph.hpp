#pragma once

// Weighted simple graphs: the value type every other module consumes.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turan {

using Vertex = int;

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple graph with finite nonzero edge weights.
///
/// Stored densely: the toolkit targets a few hundred vertices at most, where
/// an n x n weight table is both the simplest and the fastest layout. Edges
/// are kept canonical (u < v) and sorted by (u, v).
class WeightedGraph {
public:
  WeightedGraph() = default;

  WeightedGraph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0.0) {
    if (n < 0) throw PreconditionError("vertex count must be nonnegative");
    for (auto& e : edges) {
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= n) throw PreconditionError("edge endpoint out of range");
      if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
      if (!std::isfinite(e.w)) throw PreconditionError("non-finite edge weight");
      if (e.w == 0.0) throw PreconditionError("zero edge weight (structural ambiguity)");
      double& slot = adj_[index(e.u, e.v)];
      if (slot != 0.0)
        throw PreconditionError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
      slot = e.w;
      adj_[index(e.v, e.u)] = e.w;
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    edges_ = std::move(edges);
    degree_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& e : edges_) {
      ++degree_[e.u];
      ++degree_[e.v];
    }
  }

  /// Unit-weight graph from a list of vertex pairs.
  static WeightedGraph unweighted(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, 1.0});
    return WeightedGraph(n, std::move(edges));
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  double weight(Vertex u, Vertex v) const { return adj_[index(u, v)]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[index(u, v)] != 0.0; }
  int degree(Vertex v) const { return degree_[v]; }
  const std::vector<int>& degrees() const { return degree_; }

  /// Row-major n x n adjacency matrix.
  std::span<const double> adjacency() const { return adj_; }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(degree_[v]));
    for (Vertex u = 0; u < n_; ++u)
      if (adjacent(v, u)) out.push_back(u);
    return out;
  }

  int min_degree() const {
    return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
  }

  bool unit_weights() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
  }
  bool nonnegative_weights() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w > 0.0; });
  }

  /// Same structure with every weight replaced by f(edge).
  template <typename F>
  WeightedGraph reweighted(F&& f) const {
    std::vector<Edge> edges = edges_;
    for (auto& e : edges) e.w = f(e);
    return WeightedGraph(n_, std::move(edges));
  }

  WeightedGraph scaled(double t) const {
    return reweighted([t](const Edge& e) { return t * e.w; });
  }

  /// Unit-weight copy (structure only).
  WeightedGraph structure() const {
    return reweighted([](const Edge&) { return 1.0; });
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<double> adj_;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
};

/// Disjoint nonempty vertex sets covering a declared support.
struct Partition {
  std::vector<std::vector<Vertex>> parts;

  int count() const { return static_cast<int>(parts.size()); }

  std::vector<Vertex> support() const {
    std::vector<Vertex> all;
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    return all;
  }

  /// True iff parts are nonempty, pairwise disjoint and their union is `expected`.
  bool covers(std::vector<Vertex> expected) const {
    for (const auto& p : parts)
      if (p.empty()) return false;
    std::sort(expected.begin(), expected.end());
    auto all = support();
    return std::adjacent_find(all.begin(), all.end()) == all.end() && all == expected;
  }

  /// Part sizes in part order.
  std::vector<int> sizes() const {
    std::vector<int> s;
    for (const auto& p : parts) s.push_back(static_cast<int>(p.size()));
    return s;
  }

  bool equal_sizes() const {
    auto s = sizes();
    return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
  }
};

// ---------------------------------------------------------------------------
// Structural queries. Connectivity ignores weights.

namespace detail {

template <typename Adjacent>
std::vector<std::vector<Vertex>> components_of(const std::vector<Vertex>& vertices, Adjacent adjacent) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(vertices.size(), 0);
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(vertices[i]);
      for (std::size_t j = 0; j < vertices.size(); ++j) {
        if (!seen[j] && adjacent(vertices[i], vertices[j])) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline std::vector<Vertex> iota_vertices(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace detail

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const WeightedGraph& g) {
  return detail::components_of(detail::iota_vertices(g.order()),
                               [&](Vertex a, Vertex b) { return g.adjacent(a, b); });
}

inline int component_count(const WeightedGraph& g) {
  return static_cast<int>(connected_components(g).size());
}

inline std::vector<Vertex> isolated_vertices(const WeightedGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

/// Induced subgraph on `keep` (ascending original labels); vertex i of the
/// result is keep[i].
inline WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<Vertex>& keep) {
  std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (position[e.u] >= 0 && position[e.v] >= 0) edges.push_back({position[e.u], position[e.v], e.w});
  return WeightedGraph(static_cast<int>(keep.size()), std::move(edges));
}

struct StrippedGraph {
  WeightedGraph graph;
  std::vector<Vertex> removed;
  std::vector<Vertex> original;  // original[i] = label in the input of compacted vertex i
};

/// Drops degree-0 vertices and compacts indices, keeping the label map.
inline StrippedGraph strip_isolated(const WeightedGraph& g) {
  StrippedGraph out;
  for (Vertex v = 0; v < g.order(); ++v) (g.degree(v) == 0 ? out.removed : out.original).push_back(v);
  out.graph = induced_subgraph(g, out.original);
  return out;
}

/// Unit-weight complement.
inline WeightedGraph complement(const WeightedGraph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v, 1.0});
  return WeightedGraph(g.order(), std::move(edges));
}

/// Partition of `vertices` into complement components if G[vertices] is
/// complete multipartite (non-adjacency is an equivalence relation there),
/// otherwise nullopt. Parts are sorted and ordered by smallest member.
inline std::optional<Partition> multipartite_parts(const WeightedGraph& g, const std::vector<Vertex>& vertices) {
  Partition p;
  p.parts = detail::components_of(vertices, [&](Vertex a, Vertex b) { return a != b && !g.adjacent(a, b); });
  for (const auto& part : p.parts) {
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (g.adjacent(part[i], part[j])) return std::nullopt;
  }
  return p;
}

/// The unique complete-multipartite partition of G, or nullopt when the
/// underlying graph is not complete multipartite.
inline std::optional<Partition> complete_multipartite_partition(const WeightedGraph& g) {
  if (!isolated_vertices(g).empty())
    throw PreconditionError("complete_multipartite_partition: graph has isolated vertices");
  return multipartite_parts(g, detail::iota_vertices(g.order()));
}

}  // namespace turan

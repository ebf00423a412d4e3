#pragma once

#include "turan/clique.hpp"

namespace turan {

inline constexpr int kExactChromaticMaxOrder = 10;

namespace detail {

// Backtracking k-colouring; vertices in descending-degree order, colours
// tried in increasing order with symmetry breaking on the first unused one.
inline bool colourable(const WeightedGraph& g, const std::vector<Vertex>& order, std::vector<int>& colour,
                       std::size_t pos, int k, int used) {
  if (pos == order.size()) return true;
  const Vertex v = order[pos];
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool clash = false;
    for (std::size_t i = 0; i < pos && !clash; ++i)
      clash = colour[order[i]] == c && g.adjacent(v, order[i]);
    if (clash) continue;
    colour[v] = c;
    if (colourable(g, order, colour, pos + 1, k, std::max(used, c + 1))) return true;
  }
  colour[v] = -1;
  return false;
}

}  // namespace detail

/// χ(G) by exhaustive colouring, for n <= 10; nullopt above that.
inline std::optional<int> chromatic_number(const WeightedGraph& g) {
  const int n = g.order();
  if (n > kExactChromaticMaxOrder) return std::nullopt;
  if (n == 0) return 0;
  std::vector<Vertex> order = detail::iota_vertices(n);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (int k = std::max(1, clique_number(g));; ++k)
    if (detail::colourable(g, order, colour, 0, k, 0)) return k;
}

}  // namespace turan

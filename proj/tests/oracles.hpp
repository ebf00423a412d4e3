#pragma once

// Independent oracles shared by the unit tests and the acceptance binary.

#include <bit>
#include <cstdint>

#include "turan/graph.hpp"

namespace oracle {

// Exhaustive: every vertex subset is tested for being a clique (n <= 20).
struct SubsetCliques {
  int omega = 0;
  std::vector<int> cl_v;
  std::vector<int> cl_e;  // in edge order

  explicit SubsetCliques(const turan::WeightedGraph& g) {
    const int n = g.order();
    cl_v.assign(static_cast<std::size_t>(n), 1);
    cl_e.assign(static_cast<std::size_t>(g.size()), 0);
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      bool clique = true;
      for (int i = 0; i < n && clique; ++i)
        for (int j = i + 1; j < n && clique; ++j)
          if ((s >> i & 1u) && (s >> j & 1u) && !g.adjacent(i, j)) clique = false;
      if (!clique) continue;
      const int k = std::popcount(s);
      omega = std::max(omega, k);
      for (int i = 0; i < n; ++i)
        if (s >> i & 1u) cl_v[i] = std::max(cl_v[i], k);
      for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& ed = g.edges()[e];
        if ((s >> ed.u & 1u) && (s >> ed.v & 1u)) cl_e[e] = std::max(cl_e[e], k);
      }
    }
  }
};

}  // namespace oracle

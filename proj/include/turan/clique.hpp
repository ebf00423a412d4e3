#pragma once

// Exact maximum-clique search and the largest-clique profile cl(v), cl(e).

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>

#include "turan/graph.hpp"

namespace turan {

/// Fixed-capacity bitset over vertex indices.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int capacity) : words_((static_cast<std::size_t>(capacity) + 63) / 64, 0) {}

  static VertexSet all(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.insert(v);
    return s;
  }
  static VertexSet of(int n, const std::vector<Vertex>& vs) {
    VertexSet s(n);
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  void insert(Vertex v) { words_[v >> 6] |= bit(v); }
  void erase(Vertex v) { words_[v >> 6] &= ~bit(v); }
  bool contains(Vertex v) const { return (words_[v >> 6] & bit(v)) != 0; }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  /// Clears every member below v (keeps v and above).
  void keep_from(Vertex v) {
    std::size_t w = static_cast<std::size_t>(v) >> 6;
    for (std::size_t i = 0; i < w && i < words_.size(); ++i) words_[i] = 0;
    if (w < words_.size()) words_[w] &= ~(bit(v) - 1);
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }
  std::vector<std::uint64_t> words_;
};

/// Structural adjacency as bitsets, built once per graph.
class CliqueSearch {
public:
  explicit CliqueSearch(const WeightedGraph& g) : n_(g.order()), nbr_(static_cast<std::size_t>(g.order())) {
    for (Vertex v = 0; v < n_; ++v) {
      nbr_[v] = VertexSet(n_);
      for (Vertex u = 0; u < n_; ++u)
        if (g.adjacent(v, u)) nbr_[v].insert(u);
    }
    degree_ = g.degrees();
  }

  int order() const { return n_; }
  const VertexSet& neighbors(Vertex v) const { return nbr_[v]; }

  /// Clique number of G[candidates]. Stops as soon as a clique of size
  /// `enough` is found (pass 0 for an exact answer).
  int clique_number(const VertexSet& candidates, int enough = 0) const {
    if (candidates.empty()) return 0;
    best_ = 0;
    enough_ = enough;
    auto order = root_order(candidates);
    expand(0, order);
    return best_;
  }

  /// A maximum clique of G[candidates]; among all maximum cliques the one whose
  /// ascending vertex sequence is lexicographically smallest.
  std::vector<Vertex> max_clique(const VertexSet& candidates) const {
    const int omega = clique_number(candidates);
    std::vector<Vertex> clique;
    VertexSet cand = candidates;
    while (static_cast<int>(clique.size()) < omega) {
      bool extended = false;
      for (Vertex v : cand.members()) {
        VertexSet rest = cand & nbr_[v];
        rest.keep_from(v + 1);
        const int need = omega - static_cast<int>(clique.size()) - 1;
        if (need == 0 || clique_number(rest, need) >= need) {
          clique.push_back(v);
          cand = rest;
          extended = true;
          break;
        }
      }
      if (!extended) throw NumericalError("max_clique: inconsistent clique number");
    }
    return clique;
  }

private:
  // Root ordering: descending degree, ties by ascending index.
  std::vector<Vertex> root_order(const VertexSet& candidates) const {
    auto vs = candidates.members();
    std::stable_sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return degree_[a] > degree_[b]; });
    return vs;
  }

  // Greedy sequential colouring of `vertices` in the given order; returns the
  // vertices regrouped by colour class and each one's colour bound.
  void colour_sort(const std::vector<Vertex>& vertices, std::vector<Vertex>& sorted, std::vector<int>& bound) const {
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : vertices) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        bool clash = false;
        for (Vertex u : classes[k])
          if (nbr_[v].contains(u)) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    sorted.clear();
    bound.clear();
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (Vertex v : classes[k]) {
        sorted.push_back(v);
        bound.push_back(static_cast<int>(k) + 1);
      }
  }

  bool expand(int depth, const std::vector<Vertex>& candidates) const {
    std::vector<Vertex> sorted;
    std::vector<int> bound;
    colour_sort(candidates, sorted, bound);
    for (std::size_t i = sorted.size(); i-- > 0;) {
      if (depth + bound[i] <= best_) return false;
      const Vertex v = sorted[i];
      // Vertices after i in colour order have already been branched on.
      std::vector<Vertex> next;
      for (std::size_t j = 0; j < i; ++j)
        if (nbr_[v].contains(sorted[j])) next.push_back(sorted[j]);
      std::sort(next.begin(), next.end());
      if (next.empty()) {
        if (depth + 1 > best_) best_ = depth + 1;
      } else if (expand(depth + 1, next)) {
        return true;
      }
      if (enough_ > 0 && best_ >= enough_) return true;
    }
    return false;
  }

  int n_;
  std::vector<VertexSet> nbr_;
  std::vector<int> degree_;
  mutable int best_ = 0;
  mutable int enough_ = 0;
};

/// Maximum clique of G (optionally of G[restricted_to]) with the
/// lexicographic tie-break described on CliqueSearch::max_clique.
inline std::vector<Vertex> max_clique(const WeightedGraph& g,
                                      const std::optional<std::vector<Vertex>>& restricted_to = std::nullopt) {
  CliqueSearch search(g);
  VertexSet cand = restricted_to ? VertexSet::of(g.order(), *restricted_to) : VertexSet::all(g.order());
  return search.max_clique(cand);
}

inline int clique_number(const WeightedGraph& g) {
  return CliqueSearch(g).clique_number(VertexSet::all(g.order()));
}

struct EdgeClique {
  Vertex u;
  Vertex v;
  int cl;
  friend bool operator==(const EdgeClique&, const EdgeClique&) = default;
};

/// omega(G), cl(v) for every vertex and cl(e) for every edge (edge order
/// matches WeightedGraph::edges()).
struct CliqueProfile {
  int omega = 0;
  std::vector<int> cl_v;
  std::vector<EdgeClique> cl_e;
};

/// cl(e) = 2 + omega(G[N(u) & N(v)]), cl(v) = 1 + omega(G[N(v)]); an
/// isolated vertex has cl(v) = 1. Weights play no role.
inline CliqueProfile clique_profile(const WeightedGraph& g) {
  CliqueSearch search(g);
  const int n = g.order();
  // Neighbourhood clique numbers recur across edges; memoise on the bitset
  // when it fits one machine word.
  std::unordered_map<std::uint64_t, int> memo;
  auto omega_of = [&](const VertexSet& s) {
    if (n > 64) return search.clique_number(s);
    const std::uint64_t key = s.words().empty() ? 0 : s.words()[0];
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int w = search.clique_number(s);
    memo.emplace(key, w);
    return w;
  };

  CliqueProfile p;
  p.cl_v.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) p.cl_v[v] = g.degree(v) == 0 ? 1 : 1 + omega_of(search.neighbors(v));
  for (const auto& e : g.edges())
    p.cl_e.push_back({e.u, e.v, 2 + omega_of(search.neighbors(e.u) & search.neighbors(e.v))});
  p.omega = n == 0 ? 0 : *std::max_element(p.cl_v.begin(), p.cl_v.end());
  return p;
}

/// Every maximal clique, each sorted ascending, in the deterministic order
/// produced by Bron–Kerbosch with Tomita pivoting (pivot = candidate with the
/// most neighbours in P, smallest index on ties).
inline std::vector<std::vector<Vertex>> maximal_cliques(const WeightedGraph& g) {
  CliqueSearch search(g);
  const int n = g.order();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current;

  std::function<void(VertexSet, VertexSet)> recurse = [&](VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      auto c = current;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
      return;
    }
    Vertex pivot = -1;
    int best = -1;
    auto consider = [&](Vertex u) {
      const int k = (p & search.neighbors(u)).count();
      if (k > best || (k == best && u < pivot)) {
        best = k;
        pivot = u;
      }
    };
    p.for_each(consider);
    x.for_each(consider);
    for (Vertex v : p.members()) {
      if (search.neighbors(pivot).contains(v)) continue;
      current.push_back(v);
      recurse(p & search.neighbors(v), x & search.neighbors(v));
      current.pop_back();
      p.erase(v);
      x.insert(v);
    }
  };
  if (n > 0) recurse(VertexSet::all(n), VertexSet(n));
  return out;
}

}  // namespace turan

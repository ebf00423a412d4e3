#pragma once

// Isomorph-free small graphs and corpus-wide verification.

#include <cstdint>
#include <map>
#include <set>
#include <thread>

#include "turan/certifier.hpp"
#include "turan/formats.hpp"
#include "turan/simplex.hpp"

namespace turan {

inline constexpr int kMaxEnumerationOrder = 8;

// ---------------------------------------------------------------------------
// Canonical form
//
// The key of a labelled graph is its upper triangle read in graph6 order
// (columns j = 1..n-1, rows i < j) as a bit string, first bit most
// significant. The canonical key is the minimum over all n! relabellings.
// Positions are filled left to right; after position j the first j(j+1)/2
// bits are fixed, so a prefix already above the best key prunes the branch.

namespace detail {

struct CanonSearch {
  int n = 0;
  int length = 0;
  std::array<std::uint8_t, 64> adj{};  // n <= 8: row bitmasks
  std::array<int, 8> perm{};
  std::uint64_t best = ~std::uint64_t{0};

  void run(int pos, std::uint8_t used, std::uint64_t prefix, int bits) {
    if (pos == n) {
      if (prefix < best) best = prefix;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      std::uint64_t p = prefix;
      for (int i = 0; i < pos; ++i) p = (p << 1) | ((adj[v] >> perm[i]) & 1u);
      const int nb = bits + pos;
      if (nb > 0 && best != ~std::uint64_t{0} && p > (best >> (length - nb))) continue;
      perm[pos] = v;
      run(pos + 1, static_cast<std::uint8_t>(used | (1u << v)), p, nb);
    }
  }
};

}  // namespace detail

/// Minimal upper-triangle bit string over all relabellings (n <= 8).
inline std::uint64_t canonical_key(const WeightedGraph& g) {
  const int n = g.order();
  if (n > kMaxEnumerationOrder) throw PreconditionError("canonical_key: n must be at most 8");
  detail::CanonSearch s;
  s.n = n;
  s.length = n * (n - 1) / 2;
  for (const auto& e : g.edges()) {
    s.adj[e.u] |= static_cast<std::uint8_t>(1u << e.v);
    s.adj[e.v] |= static_cast<std::uint8_t>(1u << e.u);
  }
  if (s.length == 0) return 0;
  s.run(0, 0, 0, 0);
  return s.best;
}

inline WeightedGraph graph_from_key(int n, std::uint64_t key) {
  const int length = n * (n - 1) / 2;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  int k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((key >> (length - 1 - k)) & 1u) pairs.emplace_back(i, j);
  return WeightedGraph::unweighted(n, pairs);
}

inline WeightedGraph canonical_form(const WeightedGraph& g) {
  return graph_from_key(g.order(), canonical_key(g.structure()));
}

/// One unit-weight representative per isomorphism class on n vertices, in
/// canonical form, sorted by canonical key. Generated by adding a vertex with
/// every neighbourhood to each class on n − 1 vertices.
inline std::vector<WeightedGraph> enumerate_graphs(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw PreconditionError("enumerate_graphs: n must lie in [1, 8], got " + std::to_string(n));
  std::vector<std::uint64_t> keys = {0};
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t key : keys) {
      const auto base = graph_from_key(k - 1, key);
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<Edge> edges = base.edges();
        for (Vertex u = 0; u < k - 1; ++u)
          if (mask & (1u << u)) edges.push_back({u, k - 1, 1.0});
        next.insert(canonical_key(WeightedGraph(k, std::move(edges))));
      }
    }
    keys.assign(next.begin(), next.end());
  }
  std::vector<WeightedGraph> out;
  out.reserve(keys.size());
  for (std::uint64_t key : keys) out.push_back(graph_from_key(n, key));
  return out;
}

/// All classes with 1 <= order <= n_max, by order then key.
inline std::vector<WeightedGraph> enumerate_up_to(int n_max) {
  std::vector<WeightedGraph> out;
  for (int n = 1; n <= n_max; ++n)
    for (auto& g : enumerate_graphs(n)) out.push_back(std::move(g));
  return out;
}

// ---------------------------------------------------------------------------
// Verification

struct BoundCounts {
  long applicable = 0;
  long satisfied = 0;
  long equality = 0;

  BoundCounts& operator+=(const BoundCounts& o) {
    applicable += o.applicable;
    satisfied += o.satisfied;
    equality += o.equality;
    return *this;
  }
  bool operator==(const BoundCounts&) const = default;
};

struct Violation {
  std::string graph;  // graph6 for unit weights, weighted edge list otherwise
  std::string check;  // a BoundId name or one of the extra checks below
  double slack = std::numeric_limits<double>::quiet_NaN();
  std::string detail;

  auto key() const { return std::tie(graph, check, detail); }
  bool operator<(const Violation& o) const { return key() < o.key(); }
};

struct EqualityMismatch {
  std::string graph;
  std::string check;
  std::string verdict;  // classifier verdict
  bool flagged = false;  // what the bound's equality flag said

  auto key() const { return std::tie(graph, check, verdict, flagged); }
  bool operator<(const EqualityMismatch& o) const { return key() < o.key(); }
};

struct VerificationReport {
  long graphs_checked = 0;
  std::map<std::string, BoundCounts> counts;
  std::vector<Violation> violations;
  std::vector<EqualityMismatch> equality_mismatches;

  bool clean() const { return violations.empty() && equality_mismatches.empty(); }

  /// Associative and commutative: lists are kept sorted.
  VerificationReport& merge(const VerificationReport& o) {
    graphs_checked += o.graphs_checked;
    for (const auto& [k, c] : o.counts) counts[k] += c;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    equality_mismatches.insert(equality_mismatches.end(), o.equality_mismatches.begin(), o.equality_mismatches.end());
    std::stable_sort(violations.begin(), violations.end());
    std::stable_sort(equality_mismatches.begin(), equality_mismatches.end());
    return *this;
  }
};

inline constexpr const char* kCheckCertifier = "CERTIFIER";
inline constexpr const char* kCheckMotzkinStraus = "MOTZKIN_STRAUS";
inline constexpr const char* kCheckChain = "CHAIN";
inline constexpr const char* kCheckPropertyP = "PROPERTY_P";
inline constexpr const char* kCheckError = "ERROR";

struct CorpusChecks {
  std::vector<BoundId> bounds;
  bool certifier = false;       // MAIN_WEIGHTED equality <=> witness for the sign-switched graph
  bool motzkin_straus = false;  // optimum of each scheme
  bool structural = false;      // chain inequality and Property-P sufficiency

  static CorpusChecks all() {
    CorpusChecks c;
    c.bounds.assign(kAllBounds.begin(), kAllBounds.end());
    c.certifier = c.motzkin_straus = c.structural = true;
    return c;
  }
};

struct CorpusMode {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  // Random: `count` graphs G(n, p) with n uniform in [n_min, n_max]; graph k
  // uses seed mix64(mix64(seed) + k) so any split over workers gives the same corpus.
  int count = 0;
  int n_min = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool weighted = false;  // weights in [−2, −0.1] ∪ [0.1, 2]

  static CorpusMode exhaustive() { return {}; }
  static CorpusMode random(int count, int n_min, double p, std::uint64_t seed, bool weighted = false) {
    CorpusMode m;
    m.kind = Kind::Random;
    m.count = count;
    m.n_min = n_min;
    m.p = p;
    m.seed = seed;
    m.weighted = weighted;
    return m;
  }
};

inline constexpr double kMotzkinStrausTolerance = 1e-6;

inline std::string graph_label(const WeightedGraph& g) {
  return g.unit_weights() ? to_graph6(g) : to_weighted_edgelist(g);
}

/// Structural verdict the equality flag of `id` must match, for the bounds
/// whose equality cases are characterised.
inline std::optional<bool> expected_equality(BoundId id, const EqualityClass& c, bool unit) {
  if (!unit) return std::nullopt;
  switch (id) {
    case BoundId::MainWeighted:
    case BoundId::LocalEdge:
    case BoundId::VertexDegree: return c.local_edge_extremal();
    case BoundId::LocalizedWilf:
    case BoundId::TuranDegree: return c.regular_complete_multipartite();
    case BoundId::AdakChandran: return c.adak_chandran_extremal();
    default: return std::nullopt;
  }
}

inline std::string describe(const EqualityClass& c) {
  std::string s = to_string(c.kind);
  if (c.complete_multipartite) s += " r=" + std::to_string(c.r) + (c.equal_parts ? " equal" : " unequal");
  if (c.isolated) s += " isolated=" + std::to_string(c.isolated);
  return s;
}

inline VerificationReport verify_graph(const WeightedGraph& g, const CorpusChecks& checks) {
  VerificationReport rep;
  rep.graphs_checked = 1;
  const std::string label = graph_label(g);
  auto fail = [&](std::string check, double slack, std::string detail) {
    rep.violations.push_back({label, std::move(check), slack, std::move(detail)});
  };

  try {
    const auto a = analyze(g);
    const auto reports = compute_all_bounds(a);
    const auto cls = classify_unweighted_equality(g);
    for (BoundId id : checks.bounds) {
      const auto& r = find_bound(reports, id);
      auto& c = rep.counts[to_string(id)];
      if (!r.compared()) continue;
      ++c.applicable;
      if (r.violated())
        fail(to_string(id), r.slack, "lhs " + format_real(r.lhs) + ", rhs " + format_real(r.rhs));
      else
        ++c.satisfied;
      if (r.equality) ++c.equality;
      if (auto want = expected_equality(id, cls, a.unit); want && *want != r.equality)
        rep.equality_mismatches.push_back({label, to_string(id), describe(cls), r.equality});
    }

    if (checks.certifier) {
      const auto& main = find_bound(reports, BoundId::MainWeighted);
      // The certifier wants one sign; mixed-sign graphs are switched first.
      const auto switched = switch_to_one_sign(g);
      const auto outcome = reconstruct_certificate(switched ? *switched : g);
      // Edgeless graphs have equality (0 = 0) but no witness.
      const bool want = main.equality && a.m > 0;
      auto& c = rep.counts[kCheckCertifier];
      ++c.applicable;
      if (outcome.accepted() == want) {
        ++c.satisfied;
        if (want) ++c.equality;
      } else {
        rep.equality_mismatches.push_back(
            {label, kCheckCertifier, outcome.stage + ": " + outcome.diagnostic, main.equality});
      }
    }

    if (checks.motzkin_straus && a.m > 0) {
      auto& c = rep.counts[kCheckMotzkinStraus];
      const double omega = a.profile.omega;
      const auto structure = g.structure();
      const auto stripped = strip_isolated(structure).graph;
      const std::array<std::pair<WeightScheme, double>, 3> targets = {
          {{WeightScheme::Plain, 1.0 - 1.0 / omega}, {WeightScheme::Vertex, 1.0}, {WeightScheme::Edge, 1.0}}};
      for (const auto& [scheme, target] : targets) {
        const auto& h = scheme == WeightScheme::Vertex ? stripped : structure;
        const double value = maximize_form(h, scheme).value;
        ++c.applicable;
        if (std::abs(value - target) > kMotzkinStrausTolerance)
          fail(kCheckMotzkinStraus, target - value, to_string(scheme) + " optimum " + format_real(value));
        else
          ++c.satisfied;
      }
    }

    if (checks.structural && a.unit) {
      // 2Σ(cl(e)−1)/cl(e) <= 2m − n + 1 for connected graphs with δ >= 1.
      if (a.n >= 2 && a.components == 1) {
        detail::Sum s;
        for (const auto& e : a.profile.cl_e) s += 2.0 * detail::cl_ratio(e.cl);
        const double rhs = 2.0 * a.m - a.n + 1.0;
        auto& c = rep.counts[kCheckChain];
        ++c.applicable;
        const double slack = rhs - s.value();
        if (slack < -kEqualityTolerance * std::max(1.0, std::abs(rhs)))
          fail(kCheckChain, slack, "chain inequality");
        else
          ++c.satisfied;
        if (std::abs(slack) <= kEqualityTolerance * std::max(1.0, std::abs(rhs))) ++c.equality;
      }
      // Property P with no isolated vertices forces Σ 1/cl(e) >= n/2.
      if (a.n >= 2 && isolated_vertices(g).empty() && property_p_check(g)) {
        detail::Sum s;
        for (const auto& e : a.profile.cl_e) s += 1.0 / e.cl;
        auto& c = rep.counts[kCheckPropertyP];
        ++c.applicable;
        const double slack = s.value() - a.n / 2.0;
        if (slack < -kEqualityTolerance * std::max(1.0, a.n / 2.0))
          fail(kCheckPropertyP, slack, "Property P without Σ 1/cl(e) >= n/2");
        else
          ++c.satisfied;
      }
    }
  } catch (const std::exception& e) {
    fail(kCheckError, std::numeric_limits<double>::quiet_NaN(), e.what());
  }
  return rep;
}

inline int default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs `checks` over the corpus. The result does not depend on `jobs`.
inline VerificationReport verify_corpus(int n_max, const CorpusChecks& checks, const CorpusMode& mode = {},
                                        int jobs = 1) {
  std::vector<WeightedGraph> corpus;
  if (mode.kind == CorpusMode::Kind::Exhaustive) {
    if (n_max < 1 || n_max > kMaxEnumerationOrder)
      throw PreconditionError("verify_corpus: exhaustive mode needs 1 <= n_max <= 8, got " + std::to_string(n_max));
    corpus = enumerate_up_to(n_max);
  } else {
    if (mode.n_min < 1 || mode.n_min > n_max) throw PreconditionError("verify_corpus: need 1 <= n_min <= n_max");
    const auto span = static_cast<std::uint64_t>(n_max - mode.n_min + 1);
    for (int k = 0; k < mode.count; ++k) {
      const std::uint64_t seed = mix64(mix64(mode.seed) + static_cast<std::uint64_t>(k));
      SplitMix64 pick(seed, stream_tag::kCorpus);
      const int n = mode.n_min + static_cast<int>(pick.next() % span);
      auto g = random_gnp(n, mode.p, seed);
      if (mode.weighted) g = randomize_weights(g, 0.1, 2.0, true, seed);
      corpus.push_back(std::move(g));
    }
  }

  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(corpus.size())));
  std::vector<VerificationReport> partial(static_cast<std::size_t>(jobs));
  auto work = [&](int j) {
    for (std::size_t i = static_cast<std::size_t>(j); i < corpus.size(); i += static_cast<std::size_t>(jobs))
      partial[j].merge(verify_graph(corpus[i], checks));
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  VerificationReport total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace turan

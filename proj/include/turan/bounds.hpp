#pragma once

// Every spectral and extremal inequality of the localized Turán family,
// evaluated on one graph with slack and an equality flag.

#include <array>
#include <limits>

#include "turan/clique.hpp"
#include "turan/coloring.hpp"
#include "turan/spectral.hpp"

namespace turan {

enum class BoundId {
  MainWeighted,
  LocalEdge,
  VertexDegree,
  LocalizedWilf,
  Nikiforov,
  WilfEdge,
  Stanley,
  Hong,
  Bradac,
  SumClMinor,
  SumCl,
  TuranDegree,
  AdakChandran,
  EdwardsElphickW,
  CvetkovicW,
  Psi,
};

inline constexpr std::array kAllBounds = {
    BoundId::MainWeighted, BoundId::LocalEdge,  BoundId::VertexDegree, BoundId::LocalizedWilf,
    BoundId::Nikiforov,    BoundId::WilfEdge,   BoundId::Stanley,      BoundId::Hong,
    BoundId::Bradac,       BoundId::SumClMinor, BoundId::SumCl,        BoundId::TuranDegree,
    BoundId::AdakChandran, BoundId::EdwardsElphickW, BoundId::CvetkovicW, BoundId::Psi,
};

inline const char* to_string(BoundId id) {
  switch (id) {
    case BoundId::MainWeighted: return "MAIN_WEIGHTED";
    case BoundId::LocalEdge: return "LOCAL_EDGE";
    case BoundId::VertexDegree: return "VERTEX_DEGREE";
    case BoundId::LocalizedWilf: return "LOCALIZED_WILF";
    case BoundId::Nikiforov: return "NIKIFOROV";
    case BoundId::WilfEdge: return "WILF_EDGE";
    case BoundId::Stanley: return "STANLEY";
    case BoundId::Hong: return "HONG";
    case BoundId::Bradac: return "BRADAC";
    case BoundId::SumClMinor: return "SUM_CL_MINOR";
    case BoundId::SumCl: return "SUM_CL";
    case BoundId::TuranDegree: return "TURAN_DEGREE";
    case BoundId::AdakChandran: return "ADAK_CHANDRAN";
    case BoundId::EdwardsElphickW: return "EDWARDS_ELPHICK_W";
    case BoundId::CvetkovicW: return "CVETKOVIC_W";
    case BoundId::Psi: return "PSI";
  }
  return "?";
}

inline std::optional<BoundId> bound_from_string(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (BoundId id : kAllBounds)
    if (s == to_string(id)) return id;
  return std::nullopt;
}

/// Upper: the inequality reads lhs <= rhs, slack = rhs - lhs.
/// Lower: the inequality reads lhs >= rhs, slack = lhs - rhs.
enum class Direction { Upper, Lower };

inline constexpr double kEqualityTolerance = 1e-8;

struct BoundReport {
  BoundId id = BoundId::MainWeighted;
  Direction direction = Direction::Upper;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double slack = std::numeric_limits<double>::quiet_NaN();
  bool equality = false;
  bool applicable = true;
  std::string reason;
  std::optional<double> parameter;  // r for NIKIFOROV, chi for the chromatic bounds

  double tolerance() const { return kEqualityTolerance * std::max(1.0, std::abs(rhs)); }
  /// Both sides are known (a chromatic bound without χ has no lhs).
  bool compared() const { return applicable && !std::isnan(slack); }
  bool violated() const { return compared() && slack < -tolerance(); }
};

namespace detail {

/// Compensated (Kahan–Babuška) summation.
class Sum {
public:
  Sum& operator+=(double x) {
    const double t = total_ + x;
    comp_ += std::abs(total_) >= std::abs(x) ? (total_ - t) + x : (x - t) + total_;
    total_ = t;
    return *this;
  }
  double value() const { return total_ + comp_; }

private:
  double total_ = 0.0;
  double comp_ = 0.0;
};

inline BoundReport compare(BoundId id, Direction dir, double lhs, double rhs) {
  BoundReport r;
  r.id = id;
  r.direction = dir;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = dir == Direction::Upper ? rhs - lhs : lhs - rhs;
  r.equality = std::abs(r.slack) <= r.tolerance();
  return r;
}

inline BoundReport not_applicable(BoundId id, Direction dir, std::string reason) {
  BoundReport r;
  r.id = id;
  r.direction = dir;
  r.applicable = false;
  r.reason = std::move(reason);
  return r;
}

}  // namespace detail

/// Everything the catalog needs about one graph, computed once.
struct GraphAnalysis {
  WeightedGraph graph;
  CliqueProfile profile;
  SpectrumSummary spectrum;
  int n = 0;
  int m = 0;
  int components = 0;
  bool unit = true;
  std::optional<int> chi;

  double lambda() const { return spectrum.spectral_radius; }
  double frobenius() const { return spectrum.frobenius_norm; }
};

inline GraphAnalysis analyze(const WeightedGraph& g, std::optional<int> chi = std::nullopt) {
  GraphAnalysis a;
  a.graph = g;
  a.profile = clique_profile(g);
  a.spectrum = spectrum(g);
  a.n = g.order();
  a.m = g.size();
  a.components = component_count(g);
  a.unit = g.unit_weights();
  a.chi = chi ? chi : chromatic_number(g.structure());
  return a;
}

namespace detail {

inline constexpr const char* kNeedsUnitWeights = "statement is for unweighted graphs (all weights 1)";

// Σ_v f(cl(v), d(v))
template <typename F>
double vertex_sum(const GraphAnalysis& a, F f) {
  Sum s;
  for (Vertex v = 0; v < a.n; ++v) s += f(a.profile.cl_v[v], a.graph.degree(v));
  return s.value();
}

inline double cl_ratio(int cl) { return double(cl - 1) / cl; }

}  // namespace detail

/// λ(G) <= sqrt(2 Σ_e (cl(e)−1)/cl(e) · w(e)²).
inline BoundReport bound_main_weighted(const GraphAnalysis& a) {
  detail::Sum s;
  for (std::size_t k = 0; k < a.profile.cl_e.size(); ++k) {
    const double w = a.graph.edges()[k].w;
    s += detail::cl_ratio(a.profile.cl_e[k].cl) * w * w;
  }
  return detail::compare(BoundId::MainWeighted, Direction::Upper, a.lambda(), std::sqrt(2.0 * s.value()));
}

/// λ(G) <= sqrt(2 Σ_e (cl(e)−1)/cl(e)).
inline BoundReport bound_local_edge(const GraphAnalysis& a) {
  if (!a.unit) return detail::not_applicable(BoundId::LocalEdge, Direction::Upper, detail::kNeedsUnitWeights);
  detail::Sum s;
  for (const auto& ec : a.profile.cl_e) s += detail::cl_ratio(ec.cl);
  return detail::compare(BoundId::LocalEdge, Direction::Upper, a.lambda(), std::sqrt(2.0 * s.value()));
}

/// λ(G) <= sqrt(Σ_v d(v)(cl(v)−1)/cl(v)).
inline BoundReport bound_vertex_degree(const GraphAnalysis& a) {
  if (!a.unit) return detail::not_applicable(BoundId::VertexDegree, Direction::Upper, detail::kNeedsUnitWeights);
  const double s = detail::vertex_sum(a, [](int cl, int d) { return d * detail::cl_ratio(cl); });
  return detail::compare(BoundId::VertexDegree, Direction::Upper, a.lambda(), std::sqrt(s));
}

/// λ(G) <= Σ_v (cl(v)−1)/cl(v).
inline BoundReport bound_localized_wilf(const GraphAnalysis& a) {
  if (!a.unit) return detail::not_applicable(BoundId::LocalizedWilf, Direction::Upper, detail::kNeedsUnitWeights);
  const double s = detail::vertex_sum(a, [](int cl, int) { return detail::cl_ratio(cl); });
  return detail::compare(BoundId::LocalizedWilf, Direction::Upper, a.lambda(), s);
}

/// NIKIFOROV (r = ω), WILF_EDGE, STANLEY, HONG.
inline std::vector<BoundReport> bound_classics(const GraphAnalysis& a) {
  std::vector<BoundReport> out;
  const double m = a.m;
  if (!a.unit) {
    for (BoundId id : {BoundId::Nikiforov, BoundId::WilfEdge, BoundId::Stanley, BoundId::Hong})
      out.push_back(detail::not_applicable(id, Direction::Upper, detail::kNeedsUnitWeights));
    return out;
  }
  if (a.n == 0) {
    out.push_back(detail::not_applicable(BoundId::Nikiforov, Direction::Upper, "graph has no vertices"));
    out.push_back(detail::not_applicable(BoundId::WilfEdge, Direction::Upper, "graph has no vertices"));
  } else {
    const int r = a.profile.omega;
    auto nik = detail::compare(BoundId::Nikiforov, Direction::Upper, a.lambda(), std::sqrt(2.0 * (1.0 - 1.0 / r) * m));
    nik.parameter = r;
    out.push_back(nik);
    out.push_back(
        detail::compare(BoundId::WilfEdge, Direction::Upper, a.lambda(), std::sqrt(2.0 * (1.0 - 1.0 / a.n) * m)));
  }
  out.push_back(detail::compare(BoundId::Stanley, Direction::Upper, a.lambda(), -0.5 + std::sqrt(2.0 * m + 0.25)));
  if (a.n == 0 || a.graph.min_degree() < 1)
    out.push_back(detail::not_applicable(BoundId::Hong, Direction::Upper, "requires minimum degree >= 1"));
  else
    out.push_back(detail::compare(BoundId::Hong, Direction::Upper, a.lambda(), std::sqrt(2.0 * m - a.n + 1.0)));
  return out;
}

/// SUM_CL_MINOR: Σ 1/(cl(e)−1) >= n/2; SUM_CL: Σ 1/cl(e) >= (n − c(G))/2 (both
/// need n >= 2 and no isolated vertices); BRADAC: Σ cl(e)/(cl(e)−1) <= n²/2.
/// Structural: weights play no role.
inline std::vector<BoundReport> sum_inequalities(const GraphAnalysis& a) {
  std::vector<BoundReport> out;
  detail::Sum minor, inv, bradac;
  for (const auto& ec : a.profile.cl_e) {
    minor += 1.0 / (ec.cl - 1);
    inv += 1.0 / ec.cl;
    bradac += double(ec.cl) / (ec.cl - 1);
  }
  const double n = a.n;
  if (a.n < 2 || a.graph.min_degree() < 1) {
    const char* why = a.n < 2 ? "requires n >= 2" : "requires no isolated vertices";
    out.push_back(detail::not_applicable(BoundId::SumClMinor, Direction::Lower, why));
    out.push_back(detail::not_applicable(BoundId::SumCl, Direction::Lower, why));
  } else {
    out.push_back(detail::compare(BoundId::SumClMinor, Direction::Lower, minor.value(), n / 2.0));
    out.push_back(detail::compare(BoundId::SumCl, Direction::Lower, inv.value(), (n - a.components) / 2.0));
  }
  out.push_back(detail::compare(BoundId::Bradac, Direction::Upper, bradac.value(), n * n / 2.0));
  return out;
}

/// Σ_v d(v)(cl(v)−1)/cl(v) <= (Σ_v (cl(v)−1)/cl(v))².
inline BoundReport turan_degree_report(const GraphAnalysis& a) {
  if (!a.unit) return detail::not_applicable(BoundId::TuranDegree, Direction::Upper, detail::kNeedsUnitWeights);
  const double lhs = detail::vertex_sum(a, [](int cl, int d) { return d * detail::cl_ratio(cl); });
  const double s = detail::vertex_sum(a, [](int cl, int) { return detail::cl_ratio(cl); });
  return detail::compare(BoundId::TuranDegree, Direction::Upper, lhs, s * s);
}

/// m <= (n/2) Σ_v (cl(v)−1)/cl(v).
inline BoundReport adak_chandran_report(const GraphAnalysis& a) {
  if (!a.unit) return detail::not_applicable(BoundId::AdakChandran, Direction::Upper, detail::kNeedsUnitWeights);
  const double s = detail::vertex_sum(a, [](int cl, int) { return detail::cl_ratio(cl); });
  return detail::compare(BoundId::AdakChandran, Direction::Upper, double(a.m), a.n / 2.0 * s);
}

/// Weighted Edwards–Elphick χ >= 1 + λ²/(‖A‖_F² − λ²) and weighted Cvetković
/// χ >= 1 + λ/(n − λ), the latter only when 2Σw(e) >= ‖A‖_F². lhs is χ when
/// known (a.chi), otherwise NaN and the report carries the bound alone.
inline std::vector<BoundReport> chromatic_lower_bounds(const GraphAnalysis& a) {
  std::vector<BoundReport> out;
  const double lambda = a.lambda();
  const double f2 = a.frobenius() * a.frobenius();
  const double chi = a.chi ? double(*a.chi) : std::numeric_limits<double>::quiet_NaN();
  auto with_chi = [&](BoundReport r) {
    if (a.chi) r.parameter = *a.chi;
    return r;
  };

  const double gap = f2 - lambda * lambda;
  if (gap <= 1e-12 * std::max(1.0, f2)) {
    out.push_back(detail::not_applicable(BoundId::EdwardsElphickW, Direction::Lower,
                                         "‖A‖_F² − λ² vanishes (graph has no edges)"));
  } else {
    out.push_back(with_chi(detail::compare(BoundId::EdwardsElphickW, Direction::Lower, chi, 1.0 + lambda * lambda / gap)));
  }

  detail::Sum wsum;
  for (const auto& e : a.graph.edges()) wsum += e.w;
  if (a.m == 0) {
    out.push_back(detail::not_applicable(BoundId::CvetkovicW, Direction::Lower, "graph has no edges"));
  } else if (2.0 * wsum.value() < f2 - 1e-12 * std::max(1.0, f2)) {
    out.push_back(detail::not_applicable(BoundId::CvetkovicW, Direction::Lower, "precondition 2Σw(e) >= ‖A‖_F² fails"));
  } else if (a.n - lambda <= 1e-12 * a.n) {
    out.push_back(detail::not_applicable(BoundId::CvetkovicW, Direction::Lower, "n − λ is not positive"));
  } else {
    out.push_back(with_chi(detail::compare(BoundId::CvetkovicW, Direction::Lower, chi, 1.0 + lambda / (a.n - lambda))));
  }
  return out;
}

/// (n − Σ 1/(d(v)+1))(n + 1 − Σ 1/(d(v)+1)) >= 2m.
inline BoundReport psi_report(const GraphAnalysis& a) {
  if (!a.unit) return detail::not_applicable(BoundId::Psi, Direction::Lower, detail::kNeedsUnitWeights);
  const double s = detail::vertex_sum(a, [](int, int d) { return 1.0 / (d + 1); });
  const double n = a.n;
  return detail::compare(BoundId::Psi, Direction::Lower, (n - s) * (n + 1.0 - s), 2.0 * a.m);
}

/// Every vertex of every maximal clique has a neighbour outside that clique.
inline bool property_p_check(const WeightedGraph& g) {
  for (const auto& s : maximal_cliques(g))
    for (Vertex v : s)
      if (g.degree(v) <= static_cast<int>(s.size()) - 1) return false;
  return true;
}

/// The full catalog in BoundId order.
inline std::vector<BoundReport> compute_all_bounds(const GraphAnalysis& a) {
  std::vector<BoundReport> out;
  out.push_back(bound_main_weighted(a));
  out.push_back(bound_local_edge(a));
  out.push_back(bound_vertex_degree(a));
  out.push_back(bound_localized_wilf(a));
  for (auto& r : bound_classics(a)) out.push_back(std::move(r));
  auto sums = sum_inequalities(a);  // SUM_CL_MINOR, SUM_CL, BRADAC
  out.push_back(sums[2]);
  out.push_back(sums[0]);
  out.push_back(sums[1]);
  out.push_back(turan_degree_report(a));
  out.push_back(adak_chandran_report(a));
  for (auto& r : chromatic_lower_bounds(a)) out.push_back(std::move(r));
  out.push_back(psi_report(a));
  return out;
}

inline std::vector<BoundReport> compute_all_bounds(const WeightedGraph& g) { return compute_all_bounds(analyze(g)); }

inline const BoundReport& find_bound(const std::vector<BoundReport>& reports, BoundId id) {
  for (const auto& r : reports)
    if (r.id == id) return r;
  throw PreconditionError(std::string("bound not in report: ") + to_string(id));
}

}  // namespace turan

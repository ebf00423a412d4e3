#pragma once

// Machine-readable output: key-sorted JSON with every real printed to 17
// significant digits, and CSV.

#include <sstream>

#include "json.hpp"
#include "turan/enumerator.hpp"

namespace turan {

using Json = nlohmann::json;  // object keys are kept sorted

namespace detail {

inline void quote(std::string& out, const std::string& s) { out += Json(s).dump(); }

inline void emit(std::string& out, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += pad;
        quote(out, it.key());
        out += sep;
        emit(out, it.value(), indent, depth + 1);
      }
      out += close + '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        out += pad;
        emit(out, v, indent, depth + 1);
      }
      out += close + ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_real(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

inline Json real(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

inline Json reals(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(real(x));
  return a;
}

}  // namespace detail

/// Deterministic text: sorted keys, %.17g reals, non-finite reals as null.
inline std::string dump_json(const Json& j, int indent = 2) {
  std::string out;
  detail::emit(out, j, indent, 0);
  return out;
}

inline Json to_json(const BoundReport& r) {
  return Json{
      {"bound_id", to_string(r.id)},
      {"direction", r.direction == Direction::Upper ? "upper" : "lower"},
      {"lhs", detail::real(r.lhs)},
      {"rhs", detail::real(r.rhs)},
      {"slack", detail::real(r.slack)},
      {"equality", r.equality},
      {"applicable", r.applicable},
      {"reason", r.reason},
      {"parameter", r.parameter ? detail::real(*r.parameter) : Json(nullptr)},
  };
}

inline Json to_json(const CliqueProfile& p) {
  Json edges = Json::array();
  for (const auto& e : p.cl_e) edges.push_back({e.u, e.v, e.cl});
  return Json{{"omega", p.omega}, {"cl_v", p.cl_v}, {"cl_e", edges}};
}

inline Json graph_report_json(const std::string& graph_id, const GraphAnalysis& a,
                              const std::vector<BoundReport>& reports, bool with_vector = false) {
  Json bounds = Json::array();
  for (const auto& r : reports) bounds.push_back(to_json(r));
  Json j{
      {"graph_id", graph_id},
      {"n", a.n},
      {"m", a.m},
      {"omega", a.profile.omega},
      {"chi", a.chi ? Json(*a.chi) : Json(nullptr)},
      {"lambda", detail::real(a.lambda())},
      {"frobenius", detail::real(a.frobenius())},
      {"bounds", bounds},
  };
  if (with_vector) j["principal_vector"] = detail::reals(a.spectrum.principal_vector);
  return j;
}

inline Json to_json(const ExtremalCertificate& c) {
  std::vector<double> norms;
  std::vector<double> w_of(static_cast<std::size_t>(c.vertices.empty() ? 0 : c.vertices.back() + 1), 0.0);
  for (std::size_t k = 0; k < c.vertices.size(); ++k) w_of[c.vertices[k]] = c.w[k];
  for (const auto& p : c.partition.parts) {
    double s = 0.0;
    for (Vertex v : p) s += w_of[v] * w_of[v];
    norms.push_back(s);
  }
  return Json{
      {"r", c.r()},
      {"c", detail::real(c.c)},
      {"sign", c.sign},
      {"partition", c.partition.parts},
      {"vertices", c.vertices},
      {"w", detail::reals(c.w)},
      {"part_norms", detail::reals(norms)},
      {"structural_residual", detail::real(c.structural_residual)},
      {"norm_residual", detail::real(c.norm_residual)},
  };
}

inline Json to_json(const CertifyOutcome& o) {
  return Json{
      {"accepted", o.accepted()},
      {"stage", o.stage},
      {"diagnostic", o.diagnostic},
      {"certificate", o.certificate ? to_json(*o.certificate) : Json(nullptr)},
  };
}

inline Json msopt_json(WeightScheme scheme, const SimplexOptimum& opt, const StructureCheck& check) {
  return Json{
      {"scheme", to_string(scheme)},
      {"value", detail::real(opt.value)},
      {"point", detail::reals(opt.point)},
      {"support", opt.support},
      {"support_minimality", opt.support_minimality},
      {"structure", Json{{"ok", check.ok}, {"diagnostic", check.diagnostic}}},
  };
}

inline Json to_json(const VerificationReport& r) {
  Json counts = Json::object();
  for (const auto& [k, c] : r.counts)
    counts[k] = Json{{"applicable", c.applicable}, {"satisfied", c.satisfied}, {"equality", c.equality}};
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(Json{{"graph", v.graph}, {"check", v.check}, {"slack", detail::real(v.slack)}, {"detail", v.detail}});
  Json mismatches = Json::array();
  for (const auto& m : r.equality_mismatches)
    mismatches.push_back(Json{{"graph", m.graph}, {"check", m.check}, {"verdict", m.verdict}, {"flagged", m.flagged}});
  return Json{
      {"graphs_checked", r.graphs_checked},
      {"counts", counts},
      {"violations", violations},
      {"equality_mismatches", mismatches},
  };
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

inline constexpr const char* kBoundsCsvHeader = "graph_id,bound_id,applicable,lhs,rhs,slack,equality,reason\n";

/// One row per bound; non-finite reals are empty fields.
inline std::string bounds_csv_rows(const std::string& graph_id, const std::vector<BoundReport>& reports) {
  auto num = [](double x) { return std::isfinite(x) ? format_real(x) : std::string(); };
  std::string out;
  for (const auto& r : reports) {
    out += csv_field(graph_id) + ',' + to_string(r.id) + ',' + (r.applicable ? "true" : "false") + ',' + num(r.lhs) +
           ',' + num(r.rhs) + ',' + num(r.slack) + ',' + (r.equality ? "true" : "false") + ',' + csv_field(r.reason) +
           '\n';
  }
  return out;
}

}  // namespace turan

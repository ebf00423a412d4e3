// turan: spectral and localized Turán bounds from the command line.
//
// Exit status: 0 success, 1 a check failed, 2 bad input or usage.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "turan/turan.hpp"

using namespace turan;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct InputOptions {
  std::string path;
  std::string format;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string infer_format(const InputOptions& in) {
  if (!in.format.empty()) return in.format;
  auto ends_with = [&](const char* ext) { return in.path.ends_with(ext); };
  if (ends_with(".g6")) return "g6";
  if (ends_with(".wel")) return "wel";
  if (ends_with(".json")) return "json";
  throw ParseError("cannot infer the format of '" + in.path + "'; pass --format g6|wel|json", 0);
}

WeightedGraph load_graph(const InputOptions& in) {
  const std::string format = infer_format(in);
  const std::string text = read_input(in.path);
  if (format == "g6") return parse_graph6(text);
  if (format == "wel") return parse_weighted_edgelist(text);
  return parse_graph_json(text);
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "graph file, or - for stdin")->required();
  cmd->add_option("--format", in.format, "input format (default: from the extension)")
      ->check(CLI::IsMember({"g6", "wel", "json"}));
}

std::string fixed7(double x) {
  if (std::isnan(x)) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7g", x);
  return buf;
}

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("TURAN_SEED")) {
    std::uint64_t v = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("TURAN_SEED is not an unsigned integer", 0);
    return v;
  }
  return seed;
}

// ---------------------------------------------------------------------------

struct BoundsOptions {
  InputOptions in;
  bool json = false;
  bool csv = false;
  bool vector = false;
};

int cmd_bounds(const BoundsOptions& o) {
  const auto g = load_graph(o.in);
  const auto a = analyze(g);
  const auto reports = compute_all_bounds(a);
  const std::string id = o.in.path == "-" ? "stdin" : o.in.path;

  if (o.json) {
    std::cout << dump_json(graph_report_json(id, a, reports, o.vector)) << '\n';
  } else if (o.csv) {
    std::cout << kBoundsCsvHeader << bounds_csv_rows(id, reports);
  } else {
    std::printf("graph %s  n=%d  m=%d  omega=%d  lambda=%s  |A|_F=%s\n", id.c_str(), a.n, a.m, a.profile.omega,
                fixed7(a.lambda()).c_str(), fixed7(a.frobenius()).c_str());
    std::printf("%-18s %14s %14s %14s  %s\n", "bound", "lhs", "rhs", "slack", "status");
    for (const auto& r : reports) {
      std::string status = !r.applicable  ? "n/a: " + r.reason
                           : !r.compared() ? "bound only"
                           : r.violated()  ? "VIOLATED"
                           : r.equality    ? "equality"
                                           : "strict";
      std::printf("%-18s %14s %14s %14s  %s\n", to_string(r.id), fixed7(r.lhs).c_str(), fixed7(r.rhs).c_str(),
                  fixed7(r.slack).c_str(), status.c_str());
    }
    if (o.vector) {
      std::printf("principal vector:");
      for (double x : a.spectrum.principal_vector) std::printf(" %s", fixed7(x).c_str());
      std::printf("\n");
    }
  }
  for (const auto& r : reports)
    if (r.violated()) {
      std::cerr << "error: " << to_string(r.id) << " violated (slack " << format_real(r.slack) << ")\n";
      return kCheckFailed;
    }
  return kOk;
}

// ---------------------------------------------------------------------------

struct CertifyOptions {
  InputOptions in;
  std::string witness;
};

ExtremalCertificate load_witness(const WeightedGraph& g, const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    throw ParseError("witness " + path + ": " + e.what(), e.byte);
  }
  ExtremalCertificate cert;
  try {
    cert.w = j.at("w").get<std::vector<double>>();
    cert.sign = j.value("sign", 1);
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) > 0) cert.vertices.push_back(v);
    if (j.contains("partition")) {
      cert.partition.parts = j.at("partition").get<std::vector<std::vector<Vertex>>>();
    } else {
      const auto stripped = strip_isolated(g);
      const auto parts = complete_multipartite_partition(stripped.graph);
      if (!parts) throw PreconditionError("witness has no partition and the graph is not complete multipartite");
      for (const auto& p : parts->parts) {
        std::vector<Vertex> mapped;
        for (Vertex v : p) mapped.push_back(stripped.original[v]);
        cert.partition.parts.push_back(mapped);
      }
    }
  } catch (const Json::exception& e) {
    throw ParseError("witness " + path + ": " + e.what(), 0);
  }
  double w2 = 0.0;
  for (double x : cert.w) w2 += x * x;
  cert.c = w2;
  return cert;
}

int cmd_certify(const CertifyOptions& o) {
  const auto g = load_graph(o.in);

  if (!o.witness.empty()) {
    auto cert = load_witness(g, o.witness);
    const auto res = verify_certificate(g, cert);
    cert.structural_residual = res.structural;
    cert.norm_residual = res.norm;
    const double threshold = kCertificateTolerance * std::max(1.0, Matrix::adjacency(g).frobenius());
    const bool ok = res.structural <= threshold && res.norm <= threshold;
    CertifyOutcome out;
    out.stage = ok ? "accepted" : "residual";
    out.diagnostic = ok ? "supplied witness satisfies both conditions" : "supplied witness misses the conditions";
    if (ok) {
      out.certificate = cert;
    }
    Json j = to_json(out);
    j["structural_residual"] = detail::real(res.structural);
    j["norm_residual"] = detail::real(res.norm);
    std::cout << dump_json(j) << '\n';
    return ok ? kOk : kCheckFailed;
  }

  const auto main = bound_main_weighted(analyze(g));
  if (!main.equality) {
    CertifyOutcome out;
    out.stage = "equality";
    out.diagnostic = "no equality in MAIN_WEIGHTED: lambda " + format_real(main.lhs) + " < bound " +
                     format_real(main.rhs);
    std::cout << dump_json(to_json(out)) << '\n';
    return kCheckFailed;
  }
  const auto out = certify_equality(g, main);
  std::cout << dump_json(to_json(out)) << '\n';
  return out.accepted() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct EnumerateOptions {
  int max_n = 7;
  std::vector<std::string> checks{"all"};
  int jobs = default_jobs();
  std::string out;
  bool json = false;
  int random = 0;
  int n_min = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool weighted = false;
};

CorpusChecks parse_checks(const std::vector<std::string>& names) {
  CorpusChecks c;
  for (std::string name : names) {
    for (auto& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (name == "all") {
      c = CorpusChecks::all();
    } else if (name == "bounds") {
      c.bounds.assign(kAllBounds.begin(), kAllBounds.end());
    } else if (name == "certifier") {
      c.certifier = true;
    } else if (name == "msopt") {
      c.motzkin_straus = true;
    } else if (name == "structural") {
      c.structural = true;
    } else if (auto id = bound_from_string(name)) {
      if (std::find(c.bounds.begin(), c.bounds.end(), *id) == c.bounds.end()) c.bounds.push_back(*id);
    } else {
      throw PreconditionError("unknown check '" + name + "'");
    }
  }
  std::sort(c.bounds.begin(), c.bounds.end());
  return c;
}

int cmd_enumerate(const EnumerateOptions& o) {
  const auto checks = parse_checks(o.checks);
  const auto mode = o.random > 0 ? CorpusMode::random(o.random, o.n_min, o.p, effective_seed(o.seed), o.weighted)
                                 : CorpusMode::exhaustive();
  if (!o.out.empty()) {
    if (mode.kind != CorpusMode::Kind::Exhaustive) throw PreconditionError("--out is only available for exhaustive runs");
    std::ofstream file(o.out);
    if (!file) throw PreconditionError("cannot write '" + o.out + "'");
    for (const auto& g : enumerate_up_to(o.max_n)) file << to_graph6(g) << '\n';
  }
  const auto report = verify_corpus(o.max_n, checks, mode, o.jobs);

  if (o.json) {
    std::cout << dump_json(to_json(report)) << '\n';
  } else {
    std::printf("graphs checked: %ld\n", report.graphs_checked);
    std::printf("%-18s %10s %10s %10s\n", "check", "applicable", "satisfied", "equality");
    for (const auto& [k, c] : report.counts)
      std::printf("%-18s %10ld %10ld %10ld\n", k.c_str(), c.applicable, c.satisfied, c.equality);
    std::printf("violations: %zu\nequality mismatches: %zu\n", report.violations.size(),
                report.equality_mismatches.size());
    for (const auto& v : report.violations)
      std::printf("  violation %s %s slack %s %s\n", v.graph.c_str(), v.check.c_str(), fixed7(v.slack).c_str(),
                  v.detail.c_str());
    for (const auto& m : report.equality_mismatches)
      std::printf("  mismatch %s %s flag=%s classifier: %s\n", m.graph.c_str(), m.check.c_str(),
                  m.flagged ? "true" : "false", m.verdict.c_str());
  }
  return report.clean() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct MsoptOptions {
  InputOptions in;
  std::string scheme = "plain";
  int restarts = 16;
  std::uint64_t seed = 0;
};

int cmd_msopt(const MsoptOptions& o) {
  const auto g = load_graph(o.in);
  const auto scheme = *scheme_from_string(o.scheme);
  ReplicatorOptions opt;
  opt.restarts = o.restarts;
  opt.seed = effective_seed(o.seed);
  const auto best = maximize_form(g, scheme, opt);
  const auto check = check_equality_structure(g.structure(), best.point);
  std::cout << dump_json(msopt_json(scheme, best, check)) << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------

struct RandomOptions {
  int n = 8;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::vector<double> weights;
  bool signed_weights = false;
  std::string format;
};

int cmd_random(const RandomOptions& o) {
  const std::uint64_t seed = effective_seed(o.seed);
  auto g = random_gnp(o.n, o.p, seed);
  if (!o.weights.empty()) g = randomize_weights(g, o.weights[0], o.weights[1], o.signed_weights, seed);
  const std::string format = !o.format.empty() ? o.format : o.weights.empty() ? "g6" : "wel";
  if (format == "g6") {
    if (!g.unit_weights()) throw PreconditionError("graph6 cannot carry weights; use --format wel or json");
    std::cout << to_graph6(g) << '\n';
  } else if (format == "wel") {
    std::cout << to_weighted_edgelist(g);
  } else {
    std::cout << graph_to_json(g).dump() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral radius and localized Turán bounds for small graphs"};
  app.require_subcommand(1);

  BoundsOptions bounds;
  auto* b = app.add_subcommand("bounds", "evaluate the full bound catalog on one graph");
  add_input(b, bounds.in);
  auto* bjson = b->add_flag("--json", bounds.json, "JSON output");
  b->add_flag("--csv", bounds.csv, "CSV output, one row per bound")->excludes(bjson);
  b->add_flag("--vector", bounds.vector, "also print the principal eigenvector");

  CertifyOptions certify;
  auto* c = app.add_subcommand("certify", "reconstruct or verify an equality witness");
  add_input(c, certify.in);
  c->add_option("--witness", certify.witness, "JSON file with w (and optionally partition, sign) to verify");

  EnumerateOptions enumerate;
  auto* e = app.add_subcommand("enumerate", "verify checks over an isomorph-free or random corpus");
  e->add_option("--max-n", enumerate.max_n, "largest order")->check(CLI::Range(1, kMaxEnumerationOrder));
  e->add_option("--checks", enumerate.checks, "all, bounds, certifier, msopt, structural or bound ids")
      ->delimiter(',');
  e->add_option("--jobs", enumerate.jobs, "worker threads")->check(CLI::PositiveNumber);
  e->add_option("--out", enumerate.out, "write the corpus, one graph6 line per graph");
  e->add_flag("--json", enumerate.json, "JSON report");
  e->add_option("--random", enumerate.random, "use COUNT random G(n, p) graphs instead")->check(CLI::NonNegativeNumber);
  e->add_option("--n-min", enumerate.n_min, "smallest order for --random")->check(CLI::PositiveNumber);
  e->add_option("--p", enumerate.p, "edge probability for --random")->check(CLI::Range(0.0, 1.0));
  e->add_option("--seed", enumerate.seed, "seed for --random (TURAN_SEED overrides)");
  e->add_flag("--weighted", enumerate.weighted, "random signed weights in [0.1, 2] for --random");

  MsoptOptions msopt;
  auto* s = app.add_subcommand("msopt", "maximise a Motzkin–Straus form over the simplex");
  add_input(s, msopt.in);
  s->add_option("--scheme", msopt.scheme, "plain, vertex or edge")->check(CLI::IsMember({"plain", "vertex", "edge"}));
  s->add_option("--restarts", msopt.restarts, "replicator restarts")->check(CLI::PositiveNumber);
  s->add_option("--seed", msopt.seed, "seed for the perturbed starts (TURAN_SEED overrides)");

  RandomOptions random;
  auto* r = app.add_subcommand("random", "print a seeded random graph");
  r->add_option("--n", random.n, "order")->check(CLI::PositiveNumber);
  r->add_option("--p", random.p, "edge probability")->check(CLI::Range(0.0, 1.0));
  r->add_option("--seed", random.seed, "seed (TURAN_SEED overrides)");
  r->add_option("--weights", random.weights, "LOW,HIGH weight magnitudes")->expected(2)->delimiter(',');
  r->add_flag("--signed", random.signed_weights, "random signs");
  r->add_option("--format", random.format, "output format")->check(CLI::IsMember({"g6", "wel", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*b) return cmd_bounds(bounds);
    if (*c) return cmd_certify(certify);
    if (*e) return cmd_enumerate(enumerate);
    if (*s) return cmd_msopt(msopt);
    if (*r) return cmd_random(random);
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kBadInput;
  } catch (const PreconditionError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kBadInput;
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kBadInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kCheckFailed;
  }
  return kBadInput;
}

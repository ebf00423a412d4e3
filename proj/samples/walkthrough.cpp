// A tour of the library on the sample graphs in this directory.
//
//   walkthrough <samples-dir>

#include <fstream>
#include <iostream>
#include <iterator>

#include "turan/turan.hpp"

using namespace turan;

static std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "samples";

  // A weighted complete 3-partite graph that attains the weighted bound.
  const auto g = parse_weighted_edgelist(slurp(dir + "/example1.wel"));
  const auto a = analyze(g);
  const auto main = bound_main_weighted(a);
  std::cout << "lambda = " << format_real(a.lambda()) << ", bound = " << format_real(main.rhs)
            << (main.equality ? " (equality)\n" : "\n");

  const auto outcome = certify_equality(g, main);
  if (!outcome.accepted()) {
    std::cerr << "certificate rejected at " << outcome.stage << ": " << outcome.diagnostic << '\n';
    return 1;
  }
  std::cout << dump_json(to_json(*outcome.certificate)) << '\n';

  // Unweighted graphs: the whole catalog, then the simplex optimum of each form.
  const auto paw = parse_graph6(slurp(dir + "/paw.g6"));
  int failures = 0;
  for (const auto& r : compute_all_bounds(paw)) {
    if (r.violated()) ++failures;
    std::cout << to_string(r.id) << (r.compared() ? (r.equality ? "  equality" : "  strict") : "  n/a") << '\n';
  }
  for (auto scheme : {WeightScheme::Plain, WeightScheme::Vertex, WeightScheme::Edge}) {
    const auto opt = maximize_form(paw, scheme);
    std::cout << to_string(scheme) << " optimum " << format_real(opt.value) << '\n';
  }
  return failures == 0 ? 0 : 1;
}

// minctrl: minimum input selection for structural controllability.
//
//   minctrl --graph A.edges [--forbidden F.txt] [--verify] [--oracle] [--out result.json]
//   minctrl --mm A.mtx [--zero-tol 1e-12] ...
//   minctrl --bench erdos-renyi,1024,65536,3 [--seed 7]
//
// Exit status: 0 solved, 2 no admissible input set exists, 1 error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "minctrl/bench.hpp"
#include "minctrl/error.hpp"
#include "minctrl/flow_graph.hpp"
#include "minctrl/io.hpp"
#include "minctrl/oracle.hpp"
#include "minctrl/solver.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitError = 1;
constexpr int kExitUnsolvable = 2;

struct Flags {
  std::string graph;
  std::string mm;
  double zero_tol = 0.0;
  std::string forbidden;
  bool verify = false;
  bool oracle = false;
  std::uint64_t seed = 1;
  std::string out;
  std::string bench;
  std::string dump_flow;
};

int run_bench(const Flags& flags) {
  const auto spec = minctrl::parse_bench_spec(flags.bench, flags.seed);
  const auto rows = minctrl::run_bench(spec, &std::cout);
  const auto bad = minctrl::iteration_bound_violations(rows);
  for (const auto& row : bad) {
    std::cerr << "minctrl: iteration bound violated: n=" << row.n << " iterations=" << row.iterations << '\n';
  }
  return bad.empty() ? kExitSolved : kExitError;
}

int run_solve(const Flags& flags) {
  minctrl::SparseDigraph g = flags.graph.empty() ? minctrl::io::load_matrix_market(flags.mm, flags.zero_tol)
                                                 : minctrl::io::load_edge_list(flags.graph);
  std::vector<minctrl::Vertex> forbidden;
  if (!flags.forbidden.empty()) forbidden = minctrl::io::load_vertex_list(flags.forbidden, g.num_vertices());

  // Fail on oversized oracle requests before doing any work.
  std::optional<std::int64_t> oracle_cost;
  if (flags.oracle) oracle_cost = minctrl::oracle::brute_force_min_cost_allowed_matching(g, forbidden);

  minctrl::ForbiddenSet f(g.num_vertices(), forbidden);
  minctrl::Problem problem(std::move(g), std::move(f));

  minctrl::MinimizeOptions options;
  std::ofstream dump;
  if (!flags.dump_flow.empty()) {
    dump.open(flags.dump_flow);
    if (!dump) throw std::runtime_error("cannot open " + flags.dump_flow);
    options.on_flow_graph = [&dump](const minctrl::FlowGraph& fg, std::size_t iteration) {
      dump << "# iteration " << iteration << '\n';
      minctrl::dump_flow_graph(dump, fg);
    };
  }

  const auto outcome = minctrl::solve(problem, options);
  auto json = minctrl::io::outcome_to_json(outcome);
  const auto* sol = std::get_if<minctrl::Solution>(&outcome);
  if (flags.verify && sol) {
    json["verify"] = minctrl::oracle::check_structural_controllability(problem.graph, sol->input_set);
    if (problem.graph.num_vertices() <= minctrl::oracle::kNumericRankBound) {
      json["verify_numeric"] =
          minctrl::oracle::numeric_rank_spot_check(problem.graph, sol->input_set, 5, flags.seed);
    }
  }
  if (flags.oracle) json["oracle_cost"] = oracle_cost ? nlohmann::ordered_json(*oracle_cost) : nullptr;

  if (flags.out.empty()) {
    std::cout << json.dump() << '\n';
  } else {
    std::ofstream out(flags.out);
    if (!out) throw std::runtime_error("cannot open " + flags.out);
    out << json.dump() << '\n';
  }
  return sol ? kExitSolved : kExitUnsolvable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Minimum set of state variables to actuate so that xdot = A x + B(I) u is structurally controllable.\n"
      "\n"
      "--graph takes an edge list of G(A): a header line 'n <count>' then one edge 'i j' per line,\n"
      "meaning A(j, i) != 0. '#' starts a comment. Ids are 0-based.\n"
      "--mm takes a Matrix Market coordinate file of A itself; entry (r, c) becomes edge c -> r.\n"
      "\n"
      "Exit status: 0 solved, 2 no admissible input set, 1 error."};
  Flags flags;
  auto* graph = app.add_option("--graph", flags.graph, "Edge list of G(A)")->check(CLI::ExistingFile);
  auto* mm = app.add_option("--mm", flags.mm, "Matrix Market file of A")->check(CLI::ExistingFile);
  graph->excludes(mm);
  app.add_option("--zero-tol", flags.zero_tol, "Matrix Market entries with |v| <= tol are zeros")
      ->check(CLI::NonNegativeNumber);
  auto* forbidden =
      app.add_option("--forbidden", flags.forbidden, "Forbidden vertex ids, one per line")->check(CLI::ExistingFile);
  auto* verify = app.add_flag("--verify", flags.verify, "Check the returned input set independently");
  auto* oracle = app.add_flag("--oracle", flags.oracle, "Also compute the optimum by enumeration (n <= 10)");
  app.add_option("--seed", flags.seed, "Seed for --bench and numeric verification");
  auto* out = app.add_option("--out", flags.out, "Write the JSON result here instead of stdout");
  auto* bench = app.add_option("--bench", flags.bench, "family,nmin,nmax,reps; CSV to stdout");
  auto* dump = app.add_option("--dump-flow", flags.dump_flow, "Write every flow graph as an edge list");
  for (auto* opt : {graph, mm, forbidden, verify, oracle, out, dump}) bench->excludes(opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (!flags.bench.empty()) return run_bench(flags);
    if (flags.graph.empty() && flags.mm.empty()) {
      std::cerr << "minctrl: one of --graph, --mm or --bench is required\n";
      return kExitError;
    }
    return run_solve(flags);
  } catch (const minctrl::BoundExceeded& e) {
    std::cerr << "minctrl: BoundExceeded: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "minctrl: " << e.what() << '\n';
    return kExitError;
  }
}

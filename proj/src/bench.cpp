#include "minctrl/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>

#include "minctrl/solver.hpp"

namespace minctrl {

namespace {

long long field_to_int(std::string_view tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("bench: expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

BenchSpec parse_bench_spec(std::string_view text, std::uint64_t seed) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw std::invalid_argument("bench: expected family,nmin,nmax,reps");
  const auto family = parse_family(parts[0]);
  if (!family) throw std::invalid_argument("bench: unknown family '" + std::string(parts[0]) + "'");
  BenchSpec spec;
  spec.family = *family;
  const long long n_min = field_to_int(parts[1]);
  const long long n_max = field_to_int(parts[2]);
  const long long reps = field_to_int(parts[3]);
  if (n_min < 1 || n_max < n_min || n_max > (1 << 26) || reps < 1) {
    throw std::invalid_argument("bench: need 1 <= nmin <= nmax <= 2^26 and reps >= 1");
  }
  spec.n_min = static_cast<Vertex>(n_min);
  spec.n_max = static_cast<Vertex>(n_max);
  spec.reps = static_cast<int>(reps);
  spec.seed = seed;
  return spec;
}

std::vector<BenchRow> run_bench(const BenchSpec& spec, std::ostream* csv) {
  if (csv) *csv << "family,n,m,iterations,wall_nanos,cost\n";
  std::vector<BenchRow> rows;
  MinimizeOptions options;
  options.check_invariants = false;
  options.enforce_iteration_bound = false;  // reported per row instead

  for (long long n = spec.n_min; n <= spec.n_max; n *= 2) {
    for (int rep = 0; rep < spec.reps; ++rep) {
      std::seed_seq seq{spec.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(rep)};
      std::mt19937_64 rng(seq);
      Problem problem(generate(spec.family, static_cast<Vertex>(n), rng));

      const auto begin = std::chrono::steady_clock::now();
      const SolveOutcome outcome = solve(problem, options);
      const auto end = std::chrono::steady_clock::now();

      const auto& sol = std::get<Solution>(outcome);  // F is empty: always solvable
      std::size_t max_work = 0;
      for (const auto& rec : sol.diagnostics.per_iteration) max_work = std::max(max_work, rec.work);
      BenchRow row{spec.family,
                   static_cast<Vertex>(n),
                   problem.graph.num_edges(),
                   sol.diagnostics.iterations,
                   std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin).count(),
                   sol.cost,
                   max_work};
      if (csv) {
        *csv << to_string(row.family) << ',' << row.n << ',' << row.m << ',' << row.iterations << ','
             << row.wall_nanos << ',' << row.cost << '\n';
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<BenchRow> iteration_bound_violations(const std::vector<BenchRow>& rows) {
  std::vector<BenchRow> bad;
  for (const auto& row : rows) {
    if (!within_iteration_bound(row.iterations, static_cast<std::size_t>(row.n))) bad.push_back(row);
  }
  return bad;
}

}  // namespace minctrl

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "minctrl/generators.hpp"

namespace minctrl {

/// Sizes run from n_min, doubling, up to n_max; `reps` instances per size.
struct BenchSpec {
  Family family = Family::ErdosRenyi;
  Vertex n_min = 1;
  Vertex n_max = 1;
  int reps = 1;
  std::uint64_t seed = 0;
};

struct BenchRow {
  Family family;
  Vertex n;
  std::size_t m;
  std::size_t iterations;
  std::int64_t wall_nanos;
  std::int64_t cost;
  std::size_t max_work;  // largest per-iteration work count
};

/// Parses "family,nmin,nmax,reps". Throws std::invalid_argument.
BenchSpec parse_bench_spec(std::string_view text, std::uint64_t seed);

/// Solves every instance with no forbidden vertices. With a non-null `csv`, writes
/// the header "family,n,m,iterations,wall_nanos,cost" and one line per row.
std::vector<BenchRow> run_bench(const BenchSpec& spec, std::ostream* csv = nullptr);

/// Rows whose iteration count exceeds 6 sqrt(n).
std::vector<BenchRow> iteration_bound_violations(const std::vector<BenchRow>& rows);

}  // namespace minctrl

#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "minctrl/graph.hpp"
#include "minctrl/solver.hpp"

namespace minctrl::io {

// Edge-list format:
//
//   # comments run to end of line
//   n 4
//   0 1      <- edge 0 -> 1 of G(A), i.e. A(1, 0) != 0
//   1 1
//
// The first non-comment line gives the vertex count; each later line is one
// edge "from to" with 0-based ids below n. Duplicate edges are allowed.

/// Throws ParseError (with line number) or IndexOutOfRange.
SparseDigraph read_edge_list(std::istream& in);
SparseDigraph load_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const SparseDigraph& g);

/// Matrix Market coordinate file holding A itself. Entry (r, c, v) with
/// |v| > zero_tol gives edge c -> r (1-based in the file). Fields real, integer
/// and pattern are accepted, as are general, symmetric and skew-symmetric
/// storage. Throws NotSquare for rectangular headers and ParseError otherwise.
SparseDigraph read_matrix_market(std::istream& in, double zero_tol = 0.0);
SparseDigraph load_matrix_market(const std::filesystem::path& path, double zero_tol = 0.0);

/// One vertex id per line, '#' comments allowed. Ids must lie in [0, n).
std::vector<Vertex> read_vertex_list(std::istream& in, Vertex n);
std::vector<Vertex> load_vertex_list(const std::filesystem::path& path, Vertex n);

/// {solvable, reason?, input_set, cost, iterations, per_iteration: [{dist, paths, cost}]}.
nlohmann::ordered_json outcome_to_json(const SolveOutcome& outcome);

}  // namespace minctrl::io

#pragma once

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "minctrl/augment.hpp"
#include "minctrl/graph.hpp"
#include "minctrl/matching.hpp"

namespace minctrl {

/// The system xdot = A x, as the zero pattern G(A), and the variables that may
/// not receive an input.
struct Problem {
  SparseDigraph graph;
  ForbiddenSet forbidden;

  Problem(SparseDigraph g, ForbiddenSet f);
  explicit Problem(SparseDigraph g) : graph(std::move(g)), forbidden(graph.num_vertices()) {}
};

struct Solution {
  std::vector<Vertex> input_set;  // I, ascending
  std::int64_t cost = 0;          // |I|
  Matching certificate;           // minimum-cost allowed matching of G(A)
  std::vector<MatrixEntry> b_pattern;  // (i, i) for i in I
  Diagnostics diagnostics;
};

enum class UnsolvableReason { IsolatedForbidden, SourceSccAllForbidden, NoAllowedMatching };

std::string_view to_string(UnsolvableReason reason) noexcept;

struct Unsolvable {
  UnsolvableReason reason;
};

using SolveOutcome = std::variant<Solution, Unsolvable>;

/// Minimum set of state variables to actuate, outside F, so that
/// xdot = A x + B(I) u is structurally controllable.
///
/// Isolated vertices go straight into I and are dropped; a source SCC entirely
/// inside F, or no allowed matching, means no such I exists. Otherwise the
/// minimum-cost allowed matching M* gives I = U(M*) plus one non-forbidden
/// representative (the lowest id) per source SCC that M* leaves fully matched.
SolveOutcome solve(const Problem& p, const MinimizeOptions& options = {});

/// I from a minimum-cost allowed matching: U(M*) plus the lowest non-forbidden
/// member of every source SCC without an unmatched vertex. Ascending.
std::vector<Vertex> recover_input_set(const SccInfo& scc, const Matching& m_opt, const ForbiddenSet& f);

}  // namespace minctrl

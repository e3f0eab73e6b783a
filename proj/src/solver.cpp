#include "minctrl/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace minctrl {

Problem::Problem(SparseDigraph g, ForbiddenSet f) : graph(std::move(g)), forbidden(std::move(f)) {
  if (forbidden.universe() != graph.num_vertices()) {
    throw std::invalid_argument("forbidden set and graph disagree on the vertex count");
  }
}

std::string_view to_string(UnsolvableReason reason) noexcept {
  switch (reason) {
    case UnsolvableReason::IsolatedForbidden: return "IsolatedForbidden";
    case UnsolvableReason::SourceSccAllForbidden: return "SourceSccAllForbidden";
    case UnsolvableReason::NoAllowedMatching: return "NoAllowedMatching";
  }
  return "Unknown";
}

std::vector<Vertex> recover_input_set(const SccInfo& scc, const Matching& m_opt, const ForbiddenSet& f) {
  std::vector<Vertex> inputs = m_opt.unmatched();
  std::vector<bool> has_unmatched(scc.comps.size(), false);
  for (Vertex v : inputs) has_unmatched[scc.comp_id[v]] = true;
  for (Vertex c : scc.source_ids) {
    if (has_unmatched[c]) continue;
    const auto& members = scc.comps[c];
    auto rep = std::find_if(members.begin(), members.end(), [&](Vertex v) { return !f.contains(v); });
    if (rep == members.end()) {
      throw std::invalid_argument("recover_input_set: a source component lies entirely in F");
    }
    inputs.push_back(*rep);
  }
  std::sort(inputs.begin(), inputs.end());
  return inputs;
}

SolveOutcome solve(const Problem& p, const MinimizeOptions& options) {
  const SparseDigraph& g = p.graph;
  const ForbiddenSet& f = p.forbidden;
  const Vertex n = g.num_vertices();

  const std::vector<Vertex> isolated = isolated_vertices(g);
  for (Vertex v : isolated) {
    if (f.contains(v)) return Unsolvable{UnsolvableReason::IsolatedForbidden};
  }

  // Work on the graph without isolated vertices, relabelled densely.
  std::vector<Vertex> kept;
  kept.reserve(static_cast<std::size_t>(n) - isolated.size());
  {
    auto iso = isolated.begin();
    for (Vertex v = 0; v < n; ++v) {
      if (iso != isolated.end() && *iso == v) {
        ++iso;
      } else {
        kept.push_back(v);
      }
    }
  }
  const bool reduced = kept.size() != static_cast<std::size_t>(n);
  const SparseDigraph sub = reduced ? induced_subgraph(g, kept) : g;
  std::vector<Vertex> sub_forbidden;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (f.contains(kept[i])) sub_forbidden.push_back(static_cast<Vertex>(i));
  }
  const ForbiddenSet sub_f(sub.num_vertices(), sub_forbidden);

  const SccInfo scc = scc_decompose(sub);
  for (Vertex c : scc.source_ids) {
    const auto& members = scc.comps[c];
    if (std::all_of(members.begin(), members.end(), [&](Vertex v) { return sub_f.contains(v); })) {
      return Unsolvable{UnsolvableReason::SourceSccAllForbidden};
    }
  }

  auto start = find_allowed_matching(sub, sub_f);
  if (!start) return Unsolvable{UnsolvableReason::NoAllowedMatching};

  MinimizeResult best = minimize(sub, scc, sub_f, std::move(*start), options);
  const std::vector<Vertex> sub_inputs = recover_input_set(scc, best.matching, sub_f);

  Solution sol;
  sol.input_set = isolated;
  for (Vertex v : sub_inputs) sol.input_set.push_back(kept[v]);
  std::sort(sol.input_set.begin(), sol.input_set.end());
  sol.cost = static_cast<std::int64_t>(sol.input_set.size());
  sol.certificate = Matching(n);
  for (const Edge& e : best.matching.edges()) sol.certificate.add(kept[e.from], kept[e.to]);
  for (Vertex v : sol.input_set) sol.b_pattern.push_back({v, v});
  sol.diagnostics = std::move(best.diagnostics);
  return sol;
}

}  // namespace minctrl

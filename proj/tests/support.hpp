#pragma once

// Fixtures shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "minctrl/graph.hpp"
#include "minctrl/matching.hpp"

namespace fixtures {

using minctrl::Edge;
using minctrl::Matching;
using minctrl::SparseDigraph;
using minctrl::Vertex;

inline constexpr Vertex a = 0, b = 1, c = 2, d = 3, e = 4;

/// Four-vertex graph used throughout the worked examples:
/// a <-> b with self-loops on both, then b -> c -> d.
inline SparseDigraph four_node_graph() {
  const std::vector<Edge> edges{{a, a}, {a, b}, {b, a}, {b, b}, {b, c}, {c, d}};
  return SparseDigraph::from_edges(4, edges);
}

inline Matching matching_of(Vertex n, const std::vector<Edge>& pairs) {
  Matching m(n);
  for (const Edge& p : pairs) m.add(p.from, p.to);
  return m;
}

/// Self-loops on a and b plus c -> d: cost 2 (c unmatched, {a, b} fully matched).
inline Matching twin_matching() { return matching_of(4, {{a, a}, {b, b}, {c, d}}); }

/// a -> b -> c -> d: cost 1 (only a unmatched).
inline Matching twin2_matching() { return matching_of(4, {{a, b}, {b, c}, {c, d}}); }

/// Five-vertex graph whose source component {c, d, e} has three unmatched
/// vertices under slack_matching().
inline SparseDigraph slack_graph() {
  const std::vector<Edge> edges{{a, b}, {c, b}, {b, a}, {a, a}, {d, c}, {c, d}, {d, e}, {e, d}};
  return SparseDigraph::from_edges(5, edges);
}
inline Matching slack_matching() { return matching_of(5, {{c, b}, {b, a}}); }

inline std::vector<Vertex> random_subset(Vertex n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (coin(rng)) out.push_back(v);
  }
  return out;
}

}  // namespace fixtures

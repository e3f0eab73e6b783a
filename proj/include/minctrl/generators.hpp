#pragma once

#include <optional>
#include <random>
#include <string_view>

#include "minctrl/graph.hpp"

namespace minctrl {

enum class Family { ErdosRenyi, Preferential, Diagonal, Chain };

/// "erdos-renyi", "preferential", "diagonal", "chain".
std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family family) noexcept;

/// Every ordered pair (u, v), self-loops included, is an edge with probability p.
SparseDigraph random_digraph(Vertex n, double p, std::mt19937_64& rng);

/// Erdos-Renyi with p = mean_degree / n, sampled by geometric skips in O(n + m).
SparseDigraph erdos_renyi(Vertex n, double mean_degree, std::mt19937_64& rng);

/// Growth model: each new vertex links to min(2, v) distinct earlier vertices
/// chosen with probability proportional to degree + 1; each link gets a random
/// direction.
SparseDigraph preferential_attachment(Vertex n, std::mt19937_64& rng);

/// Self-loop on every vertex (diagonal A).
SparseDigraph diagonal_graph(Vertex n);

/// 0 -> 1 -> ... -> n-1.
SparseDigraph chain_graph(Vertex n);

/// Benchmark family of size n; Erdos-Renyi uses mean degree 3.
SparseDigraph generate(Family family, Vertex n, std::mt19937_64& rng);

}  // namespace minctrl

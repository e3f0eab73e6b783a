#include "minctrl/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace minctrl {

std::optional<Family> parse_family(std::string_view name) {
  if (name == "erdos-renyi") return Family::ErdosRenyi;
  if (name == "preferential") return Family::Preferential;
  if (name == "diagonal") return Family::Diagonal;
  if (name == "chain") return Family::Chain;
  return std::nullopt;
}

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::ErdosRenyi: return "erdos-renyi";
    case Family::Preferential: return "preferential";
    case Family::Diagonal: return "diagonal";
    case Family::Chain: return "chain";
  }
  return "unknown";
}

SparseDigraph random_digraph(Vertex n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return SparseDigraph::from_edges(n, edges);
}

SparseDigraph erdos_renyi(Vertex n, double mean_degree, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n > 0) {
    const double p = std::min(1.0, mean_degree / n);
    const auto pairs = static_cast<std::int64_t>(n) * n;
    if (p >= 1.0) {
      for (std::int64_t k = 0; k < pairs; ++k) edges.push_back({static_cast<Vertex>(k / n), static_cast<Vertex>(k % n)});
    } else if (p > 0.0) {
      std::geometric_distribution<std::int64_t> skip(p);
      edges.reserve(static_cast<std::size_t>(mean_degree * n * 1.1) + 16);
      for (std::int64_t k = skip(rng); k < pairs; k += 1 + skip(rng)) {
        edges.push_back({static_cast<Vertex>(k / n), static_cast<Vertex>(k % n)});
      }
    }
  }
  return SparseDigraph::from_edges(n, edges);
}

SparseDigraph preferential_attachment(Vertex n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  // Each vertex appears once per unit of (degree + 1), so a uniform pick from
  // `urn` is a degree-proportional pick.
  std::vector<Vertex> urn;
  std::bernoulli_distribution forward(0.5);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex links = std::min<Vertex>(2, v);
    std::vector<Vertex> chosen;
    while (static_cast<Vertex>(chosen.size()) < links) {
      std::uniform_int_distribution<std::size_t> pick(0, urn.size() - 1);
      const Vertex w = urn[pick(rng)];
      if (std::find(chosen.begin(), chosen.end(), w) == chosen.end()) chosen.push_back(w);
    }
    urn.push_back(v);
    for (Vertex w : chosen) {
      edges.push_back(forward(rng) ? Edge{w, v} : Edge{v, w});
      urn.push_back(v);
      urn.push_back(w);
    }
  }
  return SparseDigraph::from_edges(n, edges);
}

SparseDigraph diagonal_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, v});
  return SparseDigraph::from_edges(n, edges);
}

SparseDigraph chain_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return SparseDigraph::from_edges(n, edges);
}

SparseDigraph generate(Family family, Vertex n, std::mt19937_64& rng) {
  switch (family) {
    case Family::ErdosRenyi: return erdos_renyi(n, 3.0, rng);
    case Family::Preferential: return preferential_attachment(n, rng);
    case Family::Diagonal: return diagonal_graph(n);
    case Family::Chain: return chain_graph(n);
  }
  return SparseDigraph::from_edges(n, {});
}

}  // namespace minctrl

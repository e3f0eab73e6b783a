#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace minctrl {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

/// Directed edge `from -> to` of G(A); present iff A(to, from) != 0.
struct Edge {
  Vertex from;
  Vertex to;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Position of a nonzero of A, 0-based.
struct MatrixEntry {
  Vertex row;
  Vertex col;
};

/// Zero pattern of a square matrix as a directed graph with CSR adjacency in
/// both directions. Edges are deduplicated and sorted by (from, to); neighbor
/// lists are ascending. Immutable once built.
class SparseDigraph {
 public:
  SparseDigraph() = default;

  /// Throws IndexOutOfRange for endpoints outside [0, n). Duplicates are dropped.
  static SparseDigraph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> out_neighbors(Vertex u) const noexcept {
    return {out_targets_.data() + out_offsets_[u], out_targets_.data() + out_offsets_[u + 1]};
  }
  std::span<const Vertex> in_neighbors(Vertex v) const noexcept {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(Vertex u) const noexcept { return out_offsets_[u + 1] - out_offsets_[u]; }
  std::size_t in_degree(Vertex v) const noexcept { return in_offsets_[v + 1] - in_offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  friend bool operator==(const SparseDigraph& a, const SparseDigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
};

/// G(A) from the nonzero positions of A: entry (row, col) becomes edge col -> row.
SparseDigraph build_graph(Vertex n, std::span<const MatrixEntry> nonzero_entries);

/// Vertices with neither in- nor out-edges. A self-loop counts as both.
std::vector<Vertex> isolated_vertices(const SparseDigraph& g);

/// Vertices reachable from `seeds` (seeds included), ascending.
std::vector<Vertex> reachable_from(const SparseDigraph& g, std::span<const Vertex> seeds);

/// Subgraph on `keep` (ascending, distinct), relabelled 0..keep.size()-1 in order.
SparseDigraph induced_subgraph(const SparseDigraph& g, std::span<const Vertex> keep);

struct SccInfo {
  std::vector<Vertex> comp_id;            // per vertex
  std::vector<std::vector<Vertex>> comps;  // members ascending
  std::vector<bool> is_source;            // no incoming edge in the condensation
  std::vector<Vertex> source_ids;         // components with is_source, ascending

  Vertex num_components() const noexcept { return static_cast<Vertex>(comps.size()); }
};

/// Strongly connected components by iterative Tarjan, O(n + m).
/// Components are numbered in order of completion, i.e. reverse topological order
/// of the condensation.
SccInfo scc_decompose(const SparseDigraph& g);

/// Forbidden variables F as a membership mask over [0, n).
class ForbiddenSet {
 public:
  ForbiddenSet() = default;
  explicit ForbiddenSet(Vertex n) : mask_(static_cast<std::size_t>(n), false) {}
  /// Throws IndexOutOfRange for ids outside [0, n). Duplicates are ignored.
  ForbiddenSet(Vertex n, std::span<const Vertex> members);

  bool contains(Vertex v) const noexcept { return mask_[static_cast<std::size_t>(v)]; }
  Vertex universe() const noexcept { return static_cast<Vertex>(mask_.size()); }
  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

 private:
  std::vector<bool> mask_;
  std::vector<Vertex> members_;  // ascending
};

}  // namespace minctrl

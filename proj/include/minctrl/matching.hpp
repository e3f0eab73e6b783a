#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minctrl/graph.hpp"

namespace minctrl {

/// Bipartite doubling of a digraph: vertex u becomes u_src and u_dst and edge
/// (u, v) becomes (u_src, v_dst). The splitting shares storage with the graph;
/// the graph must outlive it.
class Splitting {
 public:
  explicit Splitting(const SparseDigraph& g) : g_(&g) {}

  const SparseDigraph& graph() const noexcept { return *g_; }
  Vertex num_sides() const noexcept { return g_->num_vertices(); }
  std::size_t num_edges() const noexcept { return g_->num_edges(); }

  /// Edges (u_src, v_dst) as (u, v) pairs, sorted.
  std::span<const Edge> edges() const noexcept { return g_->edges(); }
  std::span<const Vertex> dst_neighbors_of_src(Vertex u) const noexcept { return g_->out_neighbors(u); }
  std::span<const Vertex> src_neighbors_of_dst(Vertex v) const noexcept { return g_->in_neighbors(v); }

 private:
  const SparseDigraph* g_;
};

inline Splitting split(const SparseDigraph& g) { return Splitting(g); }

/// A matching of the splitting, equivalently (its twin) a matching of G.
/// Vertex v is unmatched when v_dst has no mate.
class Matching {
 public:
  Matching() = default;
  explicit Matching(Vertex n)
      : mate_of_src_(static_cast<std::size_t>(n), kNoVertex),
        mate_of_dst_(static_cast<std::size_t>(n), kNoVertex) {}

  Vertex num_sides() const noexcept { return static_cast<Vertex>(mate_of_src_.size()); }
  Vertex mate_of_src(Vertex u) const noexcept { return mate_of_src_[u]; }
  Vertex mate_of_dst(Vertex v) const noexcept { return mate_of_dst_[v]; }
  bool src_matched(Vertex u) const noexcept { return mate_of_src_[u] != kNoVertex; }
  bool dst_matched(Vertex v) const noexcept { return mate_of_dst_[v] != kNoVertex; }
  std::size_t size() const noexcept { return size_; }

  /// Requires u_src and v_dst both free.
  void add(Vertex u, Vertex v);
  /// Requires (u_src, v_dst) in the matching.
  void remove(Vertex u, Vertex v);

  /// U(M): vertices whose dst copy is unmatched, ascending.
  std::vector<Vertex> unmatched() const;
  /// Matched pairs (u, v) sorted by u.
  std::vector<Edge> edges() const;

  /// Two-sided injectivity plus every pair being an edge of g.
  bool is_valid_in(const SparseDigraph& g) const;
  /// No vertex of F is unmatched.
  bool is_allowed(const ForbiddenSet& f) const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.mate_of_src_ == b.mate_of_src_ && a.mate_of_dst_ == b.mate_of_dst_;
  }

 private:
  std::vector<Vertex> mate_of_src_;
  std::vector<Vertex> mate_of_dst_;
  std::size_t size_ = 0;
};

/// Plain bipartite graph for maximum matching, left -> right adjacency in CSR.
struct BipartiteGraph {
  std::int32_t num_left = 0;
  std::int32_t num_right = 0;
  std::vector<std::size_t> offsets{0};
  std::vector<std::int32_t> targets;

  /// Pairs are (left, right); adjacency lists are sorted and deduplicated.
  static BipartiteGraph from_pairs(std::int32_t num_left, std::int32_t num_right,
                                   std::span<const std::pair<std::int32_t, std::int32_t>> pairs);
  std::span<const std::int32_t> neighbors(std::int32_t left) const noexcept {
    return {targets.data() + offsets[left], targets.data() + offsets[left + 1]};
  }
};

struct BipartiteMatching {
  std::vector<std::int32_t> mate_left;   // -1 when free
  std::vector<std::int32_t> mate_right;  // -1 when free
  std::size_t size = 0;
};

/// Maximum-cardinality matching by Hopcroft-Karp, O(E sqrt(V)).
/// Ties are broken toward lower ids so results are reproducible.
BipartiteMatching hopcroft_karp(const BipartiteGraph& bg);

/// An allowed matching (no vertex of F unmatched), or nullopt when none exists.
///
/// Solves maximum matching on the part of the splitting incident to [F]_dst;
/// when that covers every forbidden vertex the cover is lifted to G and greedily
/// extended to a maximal matching, scanning edges in ascending (src, dst) order.
std::optional<Matching> find_allowed_matching(const SparseDigraph& g, const ForbiddenSet& f);

/// Source SCCs split by unmatched count under a matching: X (none), Y (exactly one);
/// everything else is Z.
struct MatchClass {
  std::vector<Vertex> x_comps;
  std::vector<Vertex> y_comps;
  std::vector<Vertex> z_comps;
  std::vector<Vertex> unmatched_count;  // per component
  std::vector<Vertex> unmatched;        // U(M), ascending
  std::vector<Vertex> u_prime;          // U(M) outside every Y component, ascending
};

MatchClass classify(const SccInfo& scc, const Matching& m);

/// |U(M)| plus the number of source SCCs without an unmatched vertex.
std::int64_t cost(const SccInfo& scc, const Matching& m);

}  // namespace minctrl

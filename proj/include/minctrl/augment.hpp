#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "minctrl/flow_graph.hpp"
#include "minctrl/graph.hpp"
#include "minctrl/matching.hpp"

namespace minctrl {

/// The arcs of a network that lie on some shortest source -> sink path, with
/// adjacency in both directions. Acyclic because every arc climbs one BFS level.
struct LayeredDag {
  NodeId source = 0;
  NodeId sink = 0;
  NodeId sink_distance = 0;        // d(s, t) in arcs
  std::vector<NodeId> dist;        // BFS level, -1 when unreached
  std::vector<bool> on_shortest;   // node lies on some shortest s-t path
  std::vector<std::size_t> out_offsets{0};
  std::vector<NodeId> out_targets;
  std::vector<std::size_t> in_offsets{0};
  std::vector<NodeId> in_sources;  // ascending per node
  std::vector<std::int32_t> capacity;
  std::size_t work = 0;            // nodes + arcs touched while building

  std::size_t num_arcs() const noexcept { return out_targets.size(); }
};

/// BFS from the network source. nullopt when the sink is unreachable.
std::optional<LayeredDag> layered_bfs(const Network& net);

using Path = std::vector<NodeId>;

/// A maximal collection of shortest source -> sink paths that share no node
/// beyond the source and the sink, with each node used at most `capacity` times.
///
/// Repeatedly traces a path back from the sink taking the lowest-id live
/// predecessor, retires exhausted nodes and prunes anything left without a live
/// predecessor. Linear in the size of the DAG. `work`, if given, is incremented by
/// the number of nodes and arcs touched.
std::vector<Path> extract_paths(const LayeredDag& dag, std::size_t* work = nullptr);

/// Augments along each walk in turn: drops the matched edge behind every
/// dst -> src step and adds every src -> dst step. Non-core steps are ignored.
/// Accepts s-t paths and closed cycles alike.
Matching augment_on_paths(Matching m, std::span<const std::vector<FlowNode>> walks);

struct IterationRecord {
  NodeId distance = 0;     // d(s, t) in the flow graph of this iteration
  std::size_t paths = 0;   // paths augmented
  std::int64_t cost = 0;   // cost after augmenting
  std::size_t work = 0;    // flow graph size plus search work
};

struct Diagnostics {
  std::size_t iterations = 0;  // flow graphs built, including the final one with no path
  std::int64_t initial_cost = 0;
  std::vector<IterationRecord> per_iteration;  // one per augmenting iteration
};

struct MinimizeOptions {
#ifdef NDEBUG
  bool check_invariants = false;
#else
  bool check_invariants = true;
#endif
  /// Throw InternalError when the iteration count exceeds 6 sqrt(n).
  bool enforce_iteration_bound = true;
  /// Called with every flow graph built, before it is searched.
  std::function<void(const FlowGraph&, std::size_t iteration)> on_flow_graph;
};

struct MinimizeResult {
  Matching matching;
  Diagnostics diagnostics;
};

/// Minimum-cost allowed matching, starting from the allowed matching `m0`.
///
/// Each iteration builds G_flow(M), finds a maximal set of vertex-disjoint shortest
/// s-t paths and augments M along all of them; it stops when t is unreachable.
/// With check_invariants, every iteration verifies that M stays a valid allowed
/// matching, that cost drops by exactly the number of paths, that d(s, t) strictly
/// increases, and the no-regression properties of matched sources and source
/// components; any failure throws InternalError.
MinimizeResult minimize(const SparseDigraph& g, const SccInfo& scc, const ForbiddenSet& f, Matching m0,
                        const MinimizeOptions& options = {});

/// True iff `iterations` <= 6 sqrt(n).
bool within_iteration_bound(std::size_t iterations, std::size_t n) noexcept;

}  // namespace minctrl

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minctrl/graph.hpp"
#include "minctrl/matching.hpp"

namespace minctrl {

using NodeId = std::int32_t;

/// Directed graph with a distinguished source and sink, where each node other
/// than those two may be used by at most `capacity[v]` vertex-disjoint paths.
struct Network {
  NodeId num_nodes = 0;
  NodeId source = 0;
  NodeId sink = 0;
  std::vector<std::size_t> offsets{0};
  std::vector<NodeId> targets;
  std::vector<std::int32_t> capacity;

  /// Adjacency keeps the order in which edges are given, grouped by tail.
  /// An empty `capacity` means 1 everywhere.
  static Network from_edges(NodeId num_nodes, NodeId source, NodeId sink,
                            std::span<const std::pair<NodeId, NodeId>> edges,
                            std::vector<std::int32_t> capacity = {});

  std::span<const NodeId> out(NodeId u) const noexcept {
    return {targets.data() + offsets[u], targets.data() + offsets[u + 1]};
  }
  std::size_t num_edges() const noexcept { return targets.size(); }
};

enum class NodeKind : std::uint8_t { Src, Dst, SuperSource, SuperSink, Gateway, Slack };

/// A node of the flow graph as the algorithm describes it.
///   Src, Dst: index is the vertex of G.
///   Gateway:  the node s_i in front of a source SCC with no unmatched vertex;
///             index is that component's id.
///   Slack:    n^(i)_j; index is the source component id, slot is j (0-based).
struct FlowNode {
  NodeKind kind = NodeKind::SuperSource;
  Vertex index = 0;
  Vertex slot = 0;

  static FlowNode src(Vertex v) { return {NodeKind::Src, v, 0}; }
  static FlowNode dst(Vertex v) { return {NodeKind::Dst, v, 0}; }
  static FlowNode super_source() { return {NodeKind::SuperSource, 0, 0}; }
  static FlowNode super_sink() { return {NodeKind::SuperSink, 0, 0}; }
  static FlowNode gateway(Vertex comp) { return {NodeKind::Gateway, comp, 0}; }
  static FlowNode slack(Vertex comp, Vertex j) { return {NodeKind::Slack, comp, j}; }

  bool is_core() const noexcept { return kind == NodeKind::Src || kind == NodeKind::Dst; }

  friend bool operator==(const FlowNode&, const FlowNode&) = default;
  friend auto operator<=>(const FlowNode&, const FlowNode&) = default;
};

/// "src:3", "dst:3", "s", "t", "gate:1", "slack:1:0".
std::string to_string(const FlowNode& node);

/// G_flow(M): the matched splitting (unmatched edges src -> dst, matched edges
/// reversed, Y-internal edges) plus s, t, the gateways s_i and slack nodes n^(i)_j.
///
/// Each source SCC's slack family is stored as one hub node with capacity
/// k_i - 1 whose in-edges come from the component's unmatched dst nodes. A hub
/// is interchangeable with the k_i - 1 slack nodes it stands for, so network()
/// has O(n + m) edges even when the expanded graph has Omega(n^2).
class FlowGraph {
 public:
  const Network& network() const noexcept { return net_; }
  Vertex num_vertices() const noexcept { return n_; }

  /// Node count of the expanded graph (every n^(i)_j counted).
  std::size_t num_nodes() const noexcept;
  std::span<const Vertex> gateway_comps() const noexcept { return gateway_comps_; }
  std::span<const Vertex> slack_comps() const noexcept { return slack_comps_; }
  /// k_i - 1 for a source component with k_i >= 2 unmatched vertices, otherwise 0.
  Vertex slack_count(Vertex comp) const noexcept;

  /// Network id of a node; every slack node of a component maps to its hub.
  NodeId node_id(const FlowNode& node) const;
  /// Inverse of node_id; a hub is reported as slot 0 of its family.
  FlowNode describe(NodeId id) const;

  /// Out-neighbors with the slack families expanded, in network order.
  std::vector<FlowNode> out_neighbors(const FlowNode& node) const;
  /// Every edge of the expanded graph.
  std::vector<std::pair<FlowNode, FlowNode>> expanded_edges() const;

 private:
  friend FlowGraph build_flow_graph(const SparseDigraph&, const SccInfo&, const Matching&,
                                    const ForbiddenSet&, const MatchClass&);

  bool is_hub(NodeId id) const noexcept { return id >= hub_base_; }
  NodeId super_source_id() const noexcept { return 2 * n_; }
  NodeId super_sink_id() const noexcept { return 2 * n_ + 1; }

  Vertex n_ = 0;
  Network net_;
  NodeId gateway_base_ = 0;
  NodeId hub_base_ = 0;
  std::vector<Vertex> gateway_comps_;
  std::vector<Vertex> slack_comps_;
  std::vector<Vertex> slack_size_;     // per hub
  std::vector<NodeId> gateway_of_comp_;  // -1 when absent
  std::vector<NodeId> hub_of_comp_;      // -1 when absent
};

/// Builds G_flow(M) in O(n + m). `cls` must be classify(scc, m).
FlowGraph build_flow_graph(const SparseDigraph& g, const SccInfo& scc, const Matching& m,
                           const ForbiddenSet& f, const MatchClass& cls);

/// Text edge list of the expanded graph, one "tail head" pair per line.
void dump_flow_graph(std::ostream& os, const FlowGraph& fg);

}  // namespace minctrl

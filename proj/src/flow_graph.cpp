#include "minctrl/flow_graph.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

namespace minctrl {

Network Network::from_edges(NodeId num_nodes, NodeId source, NodeId sink,
                            std::span<const std::pair<NodeId, NodeId>> edges,
                            std::vector<std::int32_t> capacity) {
  Network net;
  net.num_nodes = num_nodes;
  net.source = source;
  net.sink = sink;
  const auto nn = static_cast<std::size_t>(num_nodes);
  net.offsets.assign(nn + 1, 0);
  for (const auto& [u, v] : edges) {
    assert(0 <= u && u < num_nodes && 0 <= v && v < num_nodes);
    ++net.offsets[static_cast<std::size_t>(u) + 1];
  }
  for (std::size_t i = 0; i < nn; ++i) net.offsets[i + 1] += net.offsets[i];
  net.targets.resize(edges.size());
  std::vector<std::size_t> fill(net.offsets.begin(), net.offsets.end() - 1);
  for (const auto& [u, v] : edges) net.targets[fill[static_cast<std::size_t>(u)]++] = v;
  net.capacity = capacity.empty() ? std::vector<std::int32_t>(nn, 1) : std::move(capacity);
  return net;
}

std::string to_string(const FlowNode& node) {
  switch (node.kind) {
    case NodeKind::Src: return "src:" + std::to_string(node.index);
    case NodeKind::Dst: return "dst:" + std::to_string(node.index);
    case NodeKind::SuperSource: return "s";
    case NodeKind::SuperSink: return "t";
    case NodeKind::Gateway: return "gate:" + std::to_string(node.index);
    case NodeKind::Slack: return "slack:" + std::to_string(node.index) + ":" + std::to_string(node.slot);
  }
  return "?";
}

std::size_t FlowGraph::num_nodes() const noexcept {
  std::size_t total = 2 * static_cast<std::size_t>(n_) + 2 + gateway_comps_.size();
  for (Vertex k : slack_size_) total += static_cast<std::size_t>(k);
  return total;
}

Vertex FlowGraph::slack_count(Vertex comp) const noexcept {
  if (comp < 0 || static_cast<std::size_t>(comp) >= hub_of_comp_.size()) return 0;
  const NodeId hub = hub_of_comp_[comp];
  return hub < 0 ? 0 : slack_size_[hub - hub_base_];
}

NodeId FlowGraph::node_id(const FlowNode& node) const {
  auto check_vertex = [&](Vertex v) {
    if (v < 0 || v >= n_) throw std::out_of_range("flow graph: no such vertex " + to_string(node));
  };
  auto comp_lookup = [&](const std::vector<NodeId>& table) {
    if (node.index < 0 || static_cast<std::size_t>(node.index) >= table.size() || table[node.index] < 0) {
      throw std::out_of_range("flow graph: no such node " + to_string(node));
    }
    return table[node.index];
  };
  switch (node.kind) {
    case NodeKind::Src: check_vertex(node.index); return node.index;
    case NodeKind::Dst: check_vertex(node.index); return n_ + node.index;
    case NodeKind::SuperSource: return super_source_id();
    case NodeKind::SuperSink: return super_sink_id();
    case NodeKind::Gateway: return comp_lookup(gateway_of_comp_);
    case NodeKind::Slack: {
      const NodeId hub = comp_lookup(hub_of_comp_);
      if (node.slot < 0 || node.slot >= slack_size_[hub - hub_base_]) {
        throw std::out_of_range("flow graph: no such node " + to_string(node));
      }
      return hub;
    }
  }
  throw std::out_of_range("flow graph: bad node kind");
}

FlowNode FlowGraph::describe(NodeId id) const {
  if (id < n_) return FlowNode::src(id);
  if (id < 2 * n_) return FlowNode::dst(id - n_);
  if (id == super_source_id()) return FlowNode::super_source();
  if (id == super_sink_id()) return FlowNode::super_sink();
  if (id < hub_base_) return FlowNode::gateway(gateway_comps_[id - gateway_base_]);
  return FlowNode::slack(slack_comps_[id - hub_base_], 0);
}

std::vector<FlowNode> FlowGraph::out_neighbors(const FlowNode& node) const {
  std::vector<FlowNode> out;
  for (NodeId v : net_.out(node_id(node))) {
    if (is_hub(v)) {
      const Vertex comp = slack_comps_[v - hub_base_];
      for (Vertex j = 0; j < slack_size_[v - hub_base_]; ++j) out.push_back(FlowNode::slack(comp, j));
    } else {
      out.push_back(describe(v));
    }
  }
  return out;
}

std::vector<std::pair<FlowNode, FlowNode>> FlowGraph::expanded_edges() const {
  std::vector<std::pair<FlowNode, FlowNode>> edges;
  for (NodeId u = 0; u < net_.num_nodes; ++u) {
    const FlowNode tail = describe(u);
    const Vertex copies = is_hub(u) ? slack_size_[u - hub_base_] : 1;
    for (Vertex j = 0; j < copies; ++j) {
      FlowNode from = tail;
      from.slot = j;
      for (const FlowNode& head : out_neighbors(from)) edges.emplace_back(from, head);
    }
  }
  return edges;
}

FlowGraph build_flow_graph(const SparseDigraph& g, const SccInfo& scc, const Matching& m,
                           const ForbiddenSet& f, const MatchClass& cls) {
  const Vertex n = g.num_vertices();
  FlowGraph fg;
  fg.n_ = n;
  fg.gateway_base_ = 2 * n + 2;
  fg.gateway_comps_ = cls.x_comps;
  fg.gateway_of_comp_.assign(scc.comps.size(), -1);
  for (std::size_t i = 0; i < fg.gateway_comps_.size(); ++i) {
    fg.gateway_of_comp_[fg.gateway_comps_[i]] = fg.gateway_base_ + static_cast<NodeId>(i);
  }
  fg.hub_base_ = fg.gateway_base_ + static_cast<NodeId>(fg.gateway_comps_.size());
  fg.hub_of_comp_.assign(scc.comps.size(), -1);
  for (Vertex c : scc.source_ids) {
    if (cls.unmatched_count[c] >= 2) {
      fg.hub_of_comp_[c] = fg.hub_base_ + static_cast<NodeId>(fg.slack_comps_.size());
      fg.slack_comps_.push_back(c);
      fg.slack_size_.push_back(cls.unmatched_count[c] - 1);
    }
  }
  const NodeId s = fg.super_source_id();
  const NodeId t = fg.super_sink_id();
  const NodeId total = fg.hub_base_ + static_cast<NodeId>(fg.slack_comps_.size());

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(g.num_edges() + 3 * static_cast<std::size_t>(n) + 2);
  auto dst_id = [n](Vertex v) { return n + v; };

  for (Vertex u = 0; u < n; ++u) {
    const Vertex mate = m.mate_of_src(u);
    for (Vertex v : g.out_neighbors(u)) {
      if (v != mate) edges.emplace_back(u, dst_id(v));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (m.dst_matched(v)) {
      edges.emplace_back(dst_id(v), m.mate_of_dst(v));
      continue;
    }
    const Vertex c = scc.comp_id[v];
    if (!scc.is_source[c]) {
      edges.emplace_back(dst_id(v), t);
    } else if (cls.unmatched_count[c] == 1) {
      for (Vertex w : scc.comps[c]) {
        if (w != v && !f.contains(w)) edges.emplace_back(dst_id(v), dst_id(w));
      }
    } else {
      edges.emplace_back(dst_id(v), fg.hub_of_comp_[c]);
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    if (!m.src_matched(u)) edges.emplace_back(s, u);
  }
  for (std::size_t i = 0; i < fg.gateway_comps_.size(); ++i) {
    const NodeId gate = fg.gateway_base_ + static_cast<NodeId>(i);
    edges.emplace_back(s, gate);
    for (Vertex w : scc.comps[fg.gateway_comps_[i]]) {
      if (!f.contains(w)) edges.emplace_back(gate, dst_id(w));
    }
  }
  for (std::size_t h = 0; h < fg.slack_comps_.size(); ++h) {
    edges.emplace_back(fg.hub_base_ + static_cast<NodeId>(h), t);
  }

  std::vector<std::int32_t> capacity(static_cast<std::size_t>(total), 1);
  for (std::size_t h = 0; h < fg.slack_comps_.size(); ++h) {
    capacity[static_cast<std::size_t>(fg.hub_base_) + h] = fg.slack_size_[h];
  }
  fg.net_ = Network::from_edges(total, s, t, edges, std::move(capacity));
  return fg;
}

void dump_flow_graph(std::ostream& os, const FlowGraph& fg) {
  for (const auto& [from, to] : fg.expanded_edges()) os << to_string(from) << ' ' << to_string(to) << '\n';
}

}  // namespace minctrl

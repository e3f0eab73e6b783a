#include "minctrl/augment.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "minctrl/error.hpp"

namespace minctrl {

std::optional<LayeredDag> layered_bfs(const Network& net) {
  const auto nn = static_cast<std::size_t>(net.num_nodes);
  LayeredDag dag;
  dag.source = net.source;
  dag.sink = net.sink;
  dag.dist.assign(nn, -1);
  dag.capacity = net.capacity;

  std::vector<NodeId> order;
  order.reserve(nn);
  dag.dist[net.source] = 0;
  order.push_back(net.source);
  std::size_t work = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId u = order[head];
    ++work;
    const NodeId sink_dist = dag.dist[net.sink];
    if (sink_dist >= 0 && dag.dist[u] >= sink_dist) continue;
    for (NodeId v : net.out(u)) {
      ++work;
      if (dag.dist[v] < 0) {
        dag.dist[v] = dag.dist[u] + 1;
        order.push_back(v);
      }
    }
  }
  if (dag.dist[net.sink] < 0) return std::nullopt;
  dag.sink_distance = dag.dist[net.sink];

  // BFS order is nondecreasing in level, so a reverse sweep sees successors first.
  dag.on_shortest.assign(nn, false);
  dag.on_shortest[net.sink] = true;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId u = *it;
    if (u == net.sink || dag.dist[u] >= dag.sink_distance) continue;
    for (NodeId v : net.out(u)) {
      ++work;
      if (dag.on_shortest[v] && dag.dist[v] == dag.dist[u] + 1) {
        dag.on_shortest[u] = true;
        break;
      }
    }
  }

  dag.out_offsets.assign(nn + 1, 0);
  dag.in_offsets.assign(nn + 1, 0);
  for (NodeId u = 0; u < net.num_nodes; ++u) {
    if (!dag.on_shortest[u] || u == net.sink) continue;
    for (NodeId v : net.out(u)) {
      ++work;
      if (dag.on_shortest[v] && dag.dist[v] == dag.dist[u] + 1) {
        dag.out_targets.push_back(v);
        ++dag.in_offsets[static_cast<std::size_t>(v) + 1];
      }
    }
    dag.out_offsets[static_cast<std::size_t>(u) + 1] = dag.out_targets.size();
  }
  for (std::size_t i = 0; i < nn; ++i) {
    dag.out_offsets[i + 1] = std::max(dag.out_offsets[i + 1], dag.out_offsets[i]);
    dag.in_offsets[i + 1] += dag.in_offsets[i];
  }
  dag.in_sources.resize(dag.out_targets.size());
  std::vector<std::size_t> fill(dag.in_offsets.begin(), dag.in_offsets.end() - 1);
  for (NodeId u = 0; u < net.num_nodes; ++u) {
    for (std::size_t k = dag.out_offsets[u]; k < dag.out_offsets[u + 1]; ++k) {
      const NodeId v = dag.out_targets[k];
      dag.in_sources[fill[static_cast<std::size_t>(v)]++] = u;
    }
  }
  dag.work = work + nn;
  return dag;
}

std::vector<Path> extract_paths(const LayeredDag& dag, std::size_t* work) {
  const std::size_t nn = dag.dist.size();
  std::vector<bool> alive = dag.on_shortest;
  std::vector<std::int32_t> remaining = dag.capacity;
  std::vector<std::size_t> live_in(nn, 0);
  std::vector<std::size_t> cursor(nn);
  for (std::size_t v = 0; v < nn; ++v) {
    live_in[v] = dag.in_offsets[v + 1] - dag.in_offsets[v];
    cursor[v] = dag.in_offsets[v];
  }
  std::size_t touched = 0;
  std::vector<NodeId> stack;

  auto retire = [&](NodeId y) {
    if (!alive[y]) return;  // already pruned by an earlier cascade
    alive[y] = false;
    stack.assign(1, y);
    while (!stack.empty()) {
      const NodeId z = stack.back();
      stack.pop_back();
      for (std::size_t k = dag.out_offsets[z]; k < dag.out_offsets[z + 1]; ++k) {
        ++touched;
        const NodeId w = dag.out_targets[k];
        if (w == dag.sink || !alive[w]) continue;
        if (--live_in[w] == 0) {
          alive[w] = false;
          stack.push_back(w);
        }
      }
    }
  };

  std::vector<Path> paths;
  while (true) {
    Path path{dag.sink};
    NodeId x = dag.sink;
    bool found = true;
    while (x != dag.source) {
      std::size_t& c = cursor[x];
      while (c < dag.in_offsets[x + 1] && !alive[dag.in_sources[c]]) {
        ++c;
        ++touched;
      }
      if (c == dag.in_offsets[x + 1]) {
        // Only the sink can run dry: every other live node keeps a live predecessor.
        assert(x == dag.sink);
        found = false;
        break;
      }
      x = dag.in_sources[c];
      path.push_back(x);
      ++touched;
    }
    if (!found) break;
    std::reverse(path.begin(), path.end());
    if (path.size() == 2) ++cursor[dag.sink];  // a direct source -> sink arc is used once
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (--remaining[path[i]] == 0) retire(path[i]);
    }
    paths.push_back(std::move(path));
  }
  if (work) *work += touched;
  return paths;
}

Matching augment_on_paths(Matching m, std::span<const std::vector<FlowNode>> walks) {
  for (const auto& walk : walks) {
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      const FlowNode& a = walk[i];
      const FlowNode& b = walk[i + 1];
      if (a.kind == NodeKind::Dst && b.kind == NodeKind::Src) {
        if (m.mate_of_src(b.index) != a.index) {
          throw std::invalid_argument("augment: " + to_string(a) + " -> " + to_string(b) +
                                      " does not reverse a matched edge");
        }
        m.remove(b.index, a.index);
      }
    }
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      const FlowNode& a = walk[i];
      const FlowNode& b = walk[i + 1];
      if (a.kind == NodeKind::Src && b.kind == NodeKind::Dst) {
        if (m.src_matched(a.index) || m.dst_matched(b.index)) {
          throw std::invalid_argument("augment: adding " + to_string(a) + " -> " + to_string(b) +
                                      " would break the matching");
        }
        m.add(a.index, b.index);
      }
    }
  }
  return m;
}

bool within_iteration_bound(std::size_t iterations, std::size_t n) noexcept {
  return iterations * iterations <= 36 * n;
}

namespace {

void require(bool ok, std::size_t iteration, const char* what) {
  if (!ok) throw InternalError("augmentation iteration " + std::to_string(iteration) + ": " + what);
}

std::vector<Vertex> unmatched_per_component(const SccInfo& scc, const Matching& m) {
  std::vector<Vertex> counts(scc.comps.size(), 0);
  for (Vertex v = 0; v < m.num_sides(); ++v) {
    if (!m.dst_matched(v)) ++counts[scc.comp_id[v]];
  }
  return counts;
}

void check_iteration(const SparseDigraph& g, const SccInfo& scc, const ForbiddenSet& f,
                     const Matching& before, const MatchClass& cls, const Matching& after,
                     const std::vector<Path>& paths, const LayeredDag& dag, const Network& net,
                     std::int64_t cost_before, std::int64_t cost_after, NodeId prev_distance,
                     std::size_t iteration) {
  require(after.is_valid_in(g), iteration, "result is not a matching of the splitting");
  require(after.is_allowed(f), iteration, "result leaves a forbidden vertex unmatched");
  require(cost_after == cost_before - static_cast<std::int64_t>(paths.size()), iteration,
          "cost did not drop by exactly the number of paths");
  require(dag.sink_distance > prev_distance, iteration, "d(s, t) did not increase");

  std::vector<std::int32_t> used(static_cast<std::size_t>(net.num_nodes), 0);
  for (const Path& p : paths) {
    require(p.size() == static_cast<std::size_t>(dag.sink_distance) + 1, iteration, "path is not shortest");
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      require(++used[p[i]] <= net.capacity[p[i]], iteration, "paths are not vertex-disjoint");
    }
  }

  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    require(!before.src_matched(u) || after.src_matched(u), iteration, "a matched source node lost its edge");
  }
  const auto counts = unmatched_per_component(scc, after);
  for (Vertex c : cls.x_comps) require(counts[c] <= 1, iteration, "an X component gained two unmatched vertices");
  for (Vertex c : cls.y_comps) require(counts[c] <= 1, iteration, "a Y component gained an unmatched vertex");
  for (Vertex c : scc.source_ids) {
    require(cls.unmatched_count[c] == 0 || counts[c] >= 1, iteration,
            "a source component lost its last unmatched vertex");
  }
}

}  // namespace

MinimizeResult minimize(const SparseDigraph& g, const SccInfo& scc, const ForbiddenSet& f, Matching m0,
                        const MinimizeOptions& options) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  MinimizeResult result{std::move(m0), {}};
  Matching& m = result.matching;
  Diagnostics& diag = result.diagnostics;
  if (options.check_invariants) {
    require(m.is_valid_in(g), 0, "starting point is not a matching of the splitting");
    require(m.is_allowed(f), 0, "starting matching is not allowed");
  }
  std::int64_t current_cost = cost(scc, m);
  diag.initial_cost = current_cost;
  NodeId prev_distance = -1;
  std::vector<Vertex> slot_used(scc.comps.size(), 0);

  while (true) {
    const MatchClass cls = classify(scc, m);
    const FlowGraph fg = build_flow_graph(g, scc, m, f, cls);
    ++diag.iterations;
    if (options.on_flow_graph) options.on_flow_graph(fg, diag.iterations);
    if (options.enforce_iteration_bound && n > 0 && !within_iteration_bound(diag.iterations, n)) {
      throw InternalError("augmentation exceeded 6 sqrt(n) iterations (n = " + std::to_string(n) + ")");
    }

    const Network& net = fg.network();
    const auto dag = layered_bfs(net);
    if (!dag) break;
    std::size_t work = static_cast<std::size_t>(net.num_nodes) + net.num_edges() + dag->work;
    const std::vector<Path> paths = extract_paths(*dag, &work);

    std::vector<std::vector<FlowNode>> walks;
    walks.reserve(paths.size());
    for (Vertex c : fg.slack_comps()) slot_used[c] = 0;
    for (const Path& p : paths) {
      std::vector<FlowNode> walk;
      walk.reserve(p.size());
      for (NodeId id : p) {
        FlowNode node = fg.describe(id);
        if (node.kind == NodeKind::Slack) node.slot = slot_used[node.index]++;
        walk.push_back(node);
      }
      walks.push_back(std::move(walk));
    }

    Matching next = augment_on_paths(m, walks);
    const std::int64_t next_cost = cost(scc, next);
    if (options.check_invariants) {
      check_iteration(g, scc, f, m, cls, next, paths, *dag, net, current_cost, next_cost, prev_distance,
                      diag.iterations);
    }
    diag.per_iteration.push_back({dag->sink_distance, paths.size(), next_cost, work});
    prev_distance = dag->sink_distance;
    current_cost = next_cost;
    m = std::move(next);
  }
  return result;
}

}  // namespace minctrl

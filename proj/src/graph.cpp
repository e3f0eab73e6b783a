#include "minctrl/graph.hpp"

#include <algorithm>
#include <string>

#include "minctrl/error.hpp"

namespace minctrl {

namespace {

void check_vertex(Vertex v, Vertex n) {
  if (v < 0 || v >= n) {
    throw IndexOutOfRange("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

SparseDigraph SparseDigraph::from_edges(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw IndexOutOfRange("negative vertex count");
  SparseDigraph g;
  g.n_ = n;
  g.edges_.assign(edges.begin(), edges.end());
  for (const Edge& e : g.edges_) {
    check_vertex(e.from, n);
    check_vertex(e.to, n);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  const auto nn = static_cast<std::size_t>(n);
  g.out_offsets_.assign(nn + 1, 0);
  g.in_offsets_.assign(nn + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.out_offsets_[static_cast<std::size_t>(e.from) + 1];
    ++g.in_offsets_[static_cast<std::size_t>(e.to) + 1];
  }
  for (std::size_t i = 0; i < nn; ++i) {
    g.out_offsets_[i + 1] += g.out_offsets_[i];
    g.in_offsets_[i + 1] += g.in_offsets_[i];
  }
  g.out_targets_.resize(g.edges_.size());
  g.in_sources_.resize(g.edges_.size());
  std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  // edges_ is sorted by (from, to), so both fills come out ascending.
  for (std::size_t k = 0; k < g.edges_.size(); ++k) {
    const Edge& e = g.edges_[k];
    g.out_targets_[k] = e.to;
    g.in_sources_[in_fill[static_cast<std::size_t>(e.to)]++] = e.from;
  }
  return g;
}

bool SparseDigraph::has_edge(Vertex u, Vertex v) const noexcept {
  auto nbrs = out_neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

SparseDigraph build_graph(Vertex n, std::span<const MatrixEntry> nonzero_entries) {
  std::vector<Edge> edges;
  edges.reserve(nonzero_entries.size());
  for (const MatrixEntry& e : nonzero_entries) {
    check_vertex(e.row, n);
    check_vertex(e.col, n);
    edges.push_back({e.col, e.row});
  }
  return SparseDigraph::from_edges(n, edges);
}

std::vector<Vertex> isolated_vertices(const SparseDigraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.out_degree(v) == 0 && g.in_degree(v) == 0) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> reachable_from(const SparseDigraph& g, std::span<const Vertex> seeds) {
  std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()), false);
  std::vector<Vertex> stack;
  for (Vertex s : seeds) {
    check_vertex(s, g.num_vertices());
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.out_neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

SparseDigraph induced_subgraph(const SparseDigraph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> relabel(static_cast<std::size_t>(g.num_vertices()), kNoVertex);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i], g.num_vertices());
    relabel[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (relabel[e.from] != kNoVertex && relabel[e.to] != kNoVertex) {
      edges.push_back({relabel[e.from], relabel[e.to]});
    }
  }
  return SparseDigraph::from_edges(static_cast<Vertex>(keep.size()), edges);
}

SccInfo scc_decompose(const SparseDigraph& g) {
  const Vertex n = g.num_vertices();
  const auto nn = static_cast<std::size_t>(n);
  SccInfo info;
  info.comp_id.assign(nn, kNoVertex);

  std::vector<Vertex> index(nn, kNoVertex);
  std::vector<Vertex> lowlink(nn, 0);
  std::vector<bool> on_stack(nn, false);
  std::vector<Vertex> scc_stack;
  // Explicit DFS stack: (vertex, position in its out-neighbor list).
  std::vector<std::pair<Vertex, std::size_t>> call_stack;
  Vertex next_index = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kNoVertex) continue;
    call_stack.emplace_back(root, 0);
    index[root] = lowlink[root] = next_index++;
    scc_stack.push_back(root);
    on_stack[root] = true;

    while (!call_stack.empty()) {
      auto& [u, pos] = call_stack.back();
      auto nbrs = g.out_neighbors(u);
      if (pos < nbrs.size()) {
        Vertex v = nbrs[pos++];
        if (index[v] == kNoVertex) {
          index[v] = lowlink[v] = next_index++;
          scc_stack.push_back(v);
          on_stack[v] = true;
          call_stack.emplace_back(v, 0);
        } else if (on_stack[v]) {
          lowlink[u] = std::min(lowlink[u], index[v]);
        }
        continue;
      }
      const Vertex done = u;
      call_stack.pop_back();
      if (!call_stack.empty()) {
        Vertex parent = call_stack.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
      }
      if (lowlink[done] == index[done]) {
        const auto id = static_cast<Vertex>(info.comps.size());
        std::vector<Vertex> members;
        Vertex w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = false;
          info.comp_id[w] = id;
          members.push_back(w);
        } while (w != done);
        std::sort(members.begin(), members.end());
        info.comps.push_back(std::move(members));
      }
    }
  }

  info.is_source.assign(info.comps.size(), true);
  for (const Edge& e : g.edges()) {
    if (info.comp_id[e.from] != info.comp_id[e.to]) info.is_source[info.comp_id[e.to]] = false;
  }
  for (Vertex c = 0; c < info.num_components(); ++c) {
    if (info.is_source[c]) info.source_ids.push_back(c);
  }
  return info;
}

ForbiddenSet::ForbiddenSet(Vertex n, std::span<const Vertex> members) : ForbiddenSet(n) {
  for (Vertex v : members) {
    check_vertex(v, n);
    if (!mask_[v]) {
      mask_[v] = true;
      members_.push_back(v);
    }
  }
  std::sort(members_.begin(), members_.end());
}

}  // namespace minctrl

#include "minctrl/matching.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace minctrl {

void Matching::add(Vertex u, Vertex v) {
  assert(mate_of_src_[u] == kNoVertex && mate_of_dst_[v] == kNoVertex);
  mate_of_src_[u] = v;
  mate_of_dst_[v] = u;
  ++size_;
}

void Matching::remove(Vertex u, Vertex v) {
  assert(mate_of_src_[u] == v && mate_of_dst_[v] == u);
  mate_of_src_[u] = kNoVertex;
  mate_of_dst_[v] = kNoVertex;
  --size_;
}

std::vector<Vertex> Matching::unmatched() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < num_sides(); ++v) {
    if (!dst_matched(v)) out.push_back(v);
  }
  return out;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < num_sides(); ++u) {
    if (src_matched(u)) out.push_back({u, mate_of_src_[u]});
  }
  return out;
}

bool Matching::is_valid_in(const SparseDigraph& g) const {
  if (num_sides() != g.num_vertices()) return false;
  std::size_t count = 0;
  for (Vertex u = 0; u < num_sides(); ++u) {
    const Vertex v = mate_of_src_[u];
    if (v == kNoVertex) continue;
    if (v < 0 || v >= num_sides() || mate_of_dst_[v] != u || !g.has_edge(u, v)) return false;
    ++count;
  }
  for (Vertex v = 0; v < num_sides(); ++v) {
    const Vertex u = mate_of_dst_[v];
    if (u != kNoVertex && (u < 0 || u >= num_sides() || mate_of_src_[u] != v)) return false;
  }
  return count == size_;
}

bool Matching::is_allowed(const ForbiddenSet& f) const {
  return std::all_of(f.members().begin(), f.members().end(),
                     [&](Vertex v) { return dst_matched(v); });
}

BipartiteGraph BipartiteGraph::from_pairs(std::int32_t num_left, std::int32_t num_right,
                                          std::span<const std::pair<std::int32_t, std::int32_t>> pairs) {
  std::vector<std::pair<std::int32_t, std::int32_t>> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  BipartiteGraph bg;
  bg.num_left = num_left;
  bg.num_right = num_right;
  bg.offsets.assign(static_cast<std::size_t>(num_left) + 1, 0);
  bg.targets.reserve(sorted.size());
  for (const auto& [l, r] : sorted) {
    assert(0 <= l && l < num_left && 0 <= r && r < num_right);
    ++bg.offsets[static_cast<std::size_t>(l) + 1];
    bg.targets.push_back(r);
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(num_left); ++i) bg.offsets[i + 1] += bg.offsets[i];
  return bg;
}

BipartiteMatching hopcroft_karp(const BipartiteGraph& bg) {
  constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();
  const auto nl = static_cast<std::size_t>(bg.num_left);
  BipartiteMatching result;
  result.mate_left.assign(nl, -1);
  result.mate_right.assign(static_cast<std::size_t>(bg.num_right), -1);
  auto& mate_left = result.mate_left;
  auto& mate_right = result.mate_right;

  std::vector<std::int32_t> dist(nl);
  std::vector<std::size_t> cursor(nl);
  std::vector<std::int32_t> queue;
  std::vector<std::int32_t> stack;
  queue.reserve(nl);

  while (true) {
    // Layer the free left vertices and everything reachable by alternating paths.
    queue.clear();
    for (std::int32_t u = 0; u < bg.num_left; ++u) {
      if (mate_left[u] == -1) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    std::int32_t free_layer = kInf;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::int32_t u = queue[head];
      if (dist[u] >= free_layer) continue;
      for (std::int32_t v : bg.neighbors(u)) {
        const std::int32_t w = mate_right[v];
        if (w == -1) {
          free_layer = std::min(free_layer, dist[u] + 1);
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    if (free_layer == kInf) break;

    // Vertex-disjoint shortest augmenting paths, depth first without recursion.
    for (std::size_t u = 0; u < nl; ++u) cursor[u] = bg.offsets[u];
    std::size_t augmented = 0;
    for (std::int32_t root = 0; root < bg.num_left; ++root) {
      if (mate_left[root] != -1 || dist[root] != 0) continue;
      stack.assign(1, root);
      while (!stack.empty()) {
        const std::int32_t u = stack.back();
        if (cursor[u] == bg.offsets[u + 1]) {
          dist[u] = kInf;
          stack.pop_back();
          if (!stack.empty()) ++cursor[stack.back()];
          continue;
        }
        const std::int32_t v = bg.targets[cursor[u]];
        const std::int32_t w = mate_right[v];
        if (w == -1) {
          if (dist[u] + 1 == free_layer) {
            for (std::int32_t x : stack) {
              const std::int32_t y = bg.targets[cursor[x]];
              mate_left[x] = y;
              mate_right[y] = x;
              dist[x] = kInf;
            }
            ++augmented;
            stack.clear();
          } else {
            ++cursor[u];
          }
        } else if (dist[w] != kInf && dist[w] == dist[u] + 1) {
          stack.push_back(w);
        } else {
          ++cursor[u];
        }
      }
    }
    result.size += augmented;
    if (augmented == 0) break;
  }
  return result;
}

std::optional<Matching> find_allowed_matching(const SparseDigraph& g, const ForbiddenSet& f) {
  const Vertex n = g.num_vertices();
  Matching m(n);

  if (!f.empty()) {
    // G_F: right side = [F]_dst (indexed by position in F), left side = the src
    // copies of their in-neighbors, compacted.
    std::vector<std::int32_t> left_index(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> left_vertex;
    std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
    const auto members = f.members();
    for (std::size_t j = 0; j < members.size(); ++j) {
      for (Vertex u : g.in_neighbors(members[j])) {
        if (left_index[u] == -1) {
          left_index[u] = static_cast<std::int32_t>(left_vertex.size());
          left_vertex.push_back(u);
        }
        pairs.emplace_back(left_index[u], static_cast<std::int32_t>(j));
      }
    }
    const auto bg = BipartiteGraph::from_pairs(static_cast<std::int32_t>(left_vertex.size()),
                                               static_cast<std::int32_t>(members.size()), pairs);
    const auto cover = hopcroft_karp(bg);
    if (cover.size < members.size()) return std::nullopt;
    for (std::size_t j = 0; j < members.size(); ++j) {
      m.add(left_vertex[cover.mate_right[j]], members[j]);
    }
  }

  for (const Edge& e : g.edges()) {
    if (!m.src_matched(e.from) && !m.dst_matched(e.to)) m.add(e.from, e.to);
  }
  return m;
}

MatchClass classify(const SccInfo& scc, const Matching& m) {
  MatchClass cls;
  cls.unmatched_count.assign(scc.comps.size(), 0);
  cls.unmatched = m.unmatched();
  for (Vertex v : cls.unmatched) ++cls.unmatched_count[scc.comp_id[v]];
  for (Vertex c = 0; c < scc.num_components(); ++c) {
    const Vertex k = cls.unmatched_count[c];
    if (scc.is_source[c] && k == 0) {
      cls.x_comps.push_back(c);
    } else if (scc.is_source[c] && k == 1) {
      cls.y_comps.push_back(c);
    } else {
      cls.z_comps.push_back(c);
    }
  }
  for (Vertex v : cls.unmatched) {
    const Vertex c = scc.comp_id[v];
    if (!(scc.is_source[c] && cls.unmatched_count[c] == 1)) cls.u_prime.push_back(v);
  }
  return cls;
}

std::int64_t cost(const SccInfo& scc, const Matching& m) {
  std::vector<bool> has_unmatched(scc.comps.size(), false);
  std::int64_t total = 0;
  for (Vertex v = 0; v < m.num_sides(); ++v) {
    if (!m.dst_matched(v)) {
      ++total;
      has_unmatched[scc.comp_id[v]] = true;
    }
  }
  for (Vertex c : scc.source_ids) {
    if (!has_unmatched[c]) ++total;
  }
  return total;
}

}  // namespace minctrl

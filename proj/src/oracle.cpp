#include "minctrl/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>

#include "minctrl/error.hpp"

namespace minctrl::oracle {

namespace {

void check_bound(Vertex n, Vertex bound, const char* who) {
  if (n > bound) {
    throw BoundExceeded(std::string(who) + ": n = " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(bound));
  }
}

std::vector<bool> forbidden_mask(Vertex n, std::span<const Vertex> forbidden) {
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  for (Vertex v : forbidden) {
    if (v < 0 || v >= n) throw IndexOutOfRange("forbidden vertex " + std::to_string(v) + " out of range");
    mask[v] = true;
  }
  return mask;
}

// Kuhn's augmenting-path search: left vertex `u` tries each neighbor in turn.
bool try_kuhn(std::size_t u, const std::vector<std::vector<std::size_t>>& adj, std::vector<bool>& seen,
              std::vector<std::ptrdiff_t>& mate_right) {
  for (std::size_t v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = true;
    if (mate_right[v] < 0 || try_kuhn(static_cast<std::size_t>(mate_right[v]), adj, seen, mate_right)) {
      mate_right[v] = static_cast<std::ptrdiff_t>(u);
      return true;
    }
  }
  return false;
}

}  // namespace

bool check_structural_controllability(const SparseDigraph& g, std::span<const Vertex> inputs) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  for (Vertex v : inputs) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw IndexOutOfRange("input vertex " + std::to_string(v) + " out of range");
    }
  }

  // Condition 1: every state reachable from some input node.
  std::vector<bool> reached(n, false);
  std::vector<Vertex> frontier;
  for (Vertex v : inputs) {
    if (!reached[v]) {
      reached[v] = true;
      frontier.push_back(v);
    }
  }
  while (!frontier.empty()) {
    const Vertex u = frontier.back();
    frontier.pop_back();
    for (Vertex w : g.out_neighbors(u)) {
      if (!reached[w]) {
        reached[w] = true;
        frontier.push_back(w);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) return false;

  // Condition 2: a matching of the partitioned graph covering every state.
  // Left: states 0..n-1 then one input node per member of `inputs`; right: states.
  std::vector<std::vector<std::size_t>> adj(n + inputs.size());
  for (const Edge& e : g.edges()) adj[static_cast<std::size_t>(e.from)].push_back(static_cast<std::size_t>(e.to));
  for (std::size_t k = 0; k < inputs.size(); ++k) adj[n + k].push_back(static_cast<std::size_t>(inputs[k]));
  std::vector<std::ptrdiff_t> mate_right(n, -1);
  std::size_t matched = 0;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    std::vector<bool> seen(n, false);
    if (try_kuhn(u, adj, seen, mate_right)) ++matched;
  }
  return matched == n;
}

std::optional<std::int64_t> brute_force_min_cost_allowed_matching(const SparseDigraph& g,
                                                                  std::span<const Vertex> forbidden,
                                                                  Vertex bound) {
  const Vertex n = g.num_vertices();
  check_bound(n, bound, "brute_force_min_cost_allowed_matching");
  const auto nn = static_cast<std::size_t>(n);
  const auto is_forbidden = forbidden_mask(n, forbidden);

  // Pairwise reachability (reflexive) by Warshall's closure.
  std::vector<std::vector<bool>> reach(nn, std::vector<bool>(nn, false));
  for (std::size_t v = 0; v < nn; ++v) reach[v][v] = true;
  for (const Edge& e : g.edges()) reach[e.from][e.to] = true;
  for (std::size_t k = 0; k < nn; ++k)
    for (std::size_t i = 0; i < nn; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < nn; ++j)
          if (reach[k][j]) reach[i][j] = true;

  // Source components as vertex bitmasks: no vertex outside reaches into them.
  std::vector<std::uint32_t> source_masks;
  std::vector<bool> placed(nn, false);
  for (std::size_t v = 0; v < nn; ++v) {
    if (placed[v]) continue;
    std::uint32_t comp = 0;
    for (std::size_t u = 0; u < nn; ++u) {
      if (reach[u][v] && reach[v][u]) {
        comp |= 1u << u;
        placed[u] = true;
      }
    }
    bool source = true;
    for (std::size_t u = 0; u < nn && source; ++u) {
      if (!(comp >> u & 1u) && reach[u][v]) source = false;
    }
    if (source) source_masks.push_back(comp);
  }

  std::optional<std::int64_t> best;
  std::vector<bool> src_used(nn, false);
  std::uint32_t unmatched = 0;
  // Decide each dst vertex in turn: leave it unmatched or match it to a free in-neighbor.
  auto recurse = [&](auto&& self, std::size_t v) -> void {
    if (v == nn) {
      std::int64_t c = __builtin_popcount(unmatched);
      for (std::uint32_t comp : source_masks) {
        if ((comp & unmatched) == 0) ++c;
      }
      if (!best || c < *best) best = c;
      return;
    }
    for (Vertex u : g.in_neighbors(static_cast<Vertex>(v))) {
      if (src_used[u]) continue;
      src_used[u] = true;
      self(self, v + 1);
      src_used[u] = false;
    }
    if (!is_forbidden[v]) {
      unmatched |= 1u << v;
      self(self, v + 1);
      unmatched &= ~(1u << v);
    }
  };
  recurse(recurse, 0);
  return best;
}

std::optional<std::pair<std::int64_t, std::vector<Vertex>>> brute_force_min_input_set(
    const SparseDigraph& g, std::span<const Vertex> forbidden, Vertex bound) {
  const Vertex n = g.num_vertices();
  check_bound(n, bound, "brute_force_min_input_set");
  const auto is_forbidden = forbidden_mask(n, forbidden);
  std::vector<Vertex> allowed;
  for (Vertex v = 0; v < n; ++v) {
    if (!is_forbidden[v]) allowed.push_back(v);
  }

  for (std::size_t size = 0; size <= allowed.size(); ++size) {
    // Combinations of `allowed` of this size in lexicographic order.
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Vertex> subset;
      for (std::size_t i : pick) subset.push_back(allowed[i]);
      if (check_structural_controllability(g, subset)) {
        return std::make_pair(static_cast<std::int64_t>(size), std::move(subset));
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == allowed.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool numeric_rank_spot_check(const SparseDigraph& g, std::span<const Vertex> inputs, int trials,
                             std::uint64_t seed) {
  const Vertex n = g.num_vertices();
  check_bound(n, kNumericRankBound, "numeric_rank_spot_check");
  for (Vertex v : inputs) {
    if (v < 0 || v >= n) throw IndexOutOfRange("input vertex " + std::to_string(v) + " out of range");
  }
  if (n == 0) return true;
  const auto k = static_cast<Eigen::Index>(inputs.size());
  if (k == 0) return false;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> value(0.5, 1.5);
  const double eps = std::numeric_limits<double>::epsilon();

  for (int trial = 0; trial < trials; ++trial) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) a(e.to, e.from) = value(rng);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, k);
    for (Eigen::Index j = 0; j < k; ++j) b(inputs[static_cast<std::size_t>(j)], j) = value(rng);

    Eigen::MatrixXd kalman(n, n * k);
    Eigen::MatrixXd block = b;
    for (Vertex p = 0; p < n; ++p) {
      kalman.middleCols(p * k, k) = block;
      block = a * block;
    }
    // Unit column norms leave the rank unchanged and keep A^p growth from
    // swamping the relative threshold.
    for (Eigen::Index c = 0; c < kalman.cols(); ++c) {
      const double norm = kalman.col(c).norm();
      if (norm > 0) kalman.col(c) /= norm;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(kalman);
    const auto& sv = svd.singularValues();
    const double threshold = n * eps * sv(0);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > threshold) ++rank;
    }
    if (rank == n) return true;
  }
  return false;
}

}  // namespace minctrl::oracle

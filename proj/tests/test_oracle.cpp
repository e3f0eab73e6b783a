#include <doctest.h>

#include <random>

#include "minctrl/error.hpp"
#include "minctrl/generators.hpp"
#include "minctrl/oracle.hpp"
#include "support.hpp"

using namespace minctrl;
using namespace minctrl::oracle;

TEST_CASE("check_structural_controllability examples") {
  const auto diag = diagonal_graph(3);
  const std::vector<Vertex> all{0, 1, 2}, first{0};
  CHECK(check_structural_controllability(diag, all));
  CHECK_FALSE(check_structural_controllability(diag, first));
  CHECK(check_structural_controllability(chain_graph(3), first));
  // Reachable but dilated: 0 -> 1 and 0 -> 2 with one input at 0.
  const std::vector<Edge> star{{0, 1}, {0, 2}};
  CHECK_FALSE(check_structural_controllability(SparseDigraph::from_edges(3, star), first));
  const std::vector<Vertex> empty;
  CHECK(check_structural_controllability(SparseDigraph::from_edges(0, {}), empty));
}

TEST_CASE("brute_force_min_cost_allowed_matching examples") {
  const std::vector<Vertex> none;
  CHECK(brute_force_min_cost_allowed_matching(fixtures::four_node_graph(), none) == 1);
  CHECK(brute_force_min_cost_allowed_matching(diagonal_graph(1), none) == 1);
  const std::vector<Edge> star{{0, 1}, {0, 2}};
  const std::vector<Vertex> fb{1, 2};
  CHECK_FALSE(brute_force_min_cost_allowed_matching(SparseDigraph::from_edges(3, star), fb));
  CHECK_THROWS_AS(brute_force_min_cost_allowed_matching(chain_graph(11), none), BoundExceeded);
}

TEST_CASE("brute_force_min_input_set examples") {
  const std::vector<Vertex> none;
  const auto chain = brute_force_min_input_set(chain_graph(3), none);
  REQUIRE(chain);
  CHECK(chain->first == 1);
  CHECK(chain->second == std::vector<Vertex>{0});

  const auto diag = brute_force_min_input_set(diagonal_graph(3), none);
  REQUIRE(diag);
  CHECK(diag->first == 3);
  CHECK(diag->second == std::vector<Vertex>{0, 1, 2});

  const std::vector<Vertex> all{0, 1, 2};
  CHECK_FALSE(brute_force_min_input_set(chain_graph(3), all));
  CHECK_THROWS_AS(brute_force_min_input_set(chain_graph(7), none), BoundExceeded);
}

TEST_CASE("numeric_rank_spot_check examples") {
  const std::vector<Vertex> zero{0};
  CHECK(numeric_rank_spot_check(diagonal_graph(1), zero, 1, 3));
  CHECK(numeric_rank_spot_check(chain_graph(5), zero, 5, 3));
  // Vertex 1 is unreachable from input 0.
  CHECK_FALSE(numeric_rank_spot_check(diagonal_graph(2), zero, 5, 3));
  // Dilation: one input feeding two independent leaves.
  const std::vector<Edge> star{{0, 1}, {0, 2}};
  CHECK_FALSE(numeric_rank_spot_check(SparseDigraph::from_edges(3, star), zero, 5, 3));
  CHECK_THROWS_AS(numeric_rank_spot_check(chain_graph(21), zero, 1, 3), BoundExceeded);
}

TEST_CASE("property: controllability is monotone in the input set") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const Vertex n = 1 + static_cast<Vertex>(trial % 7);
    const auto g = random_digraph(n, 0.3, rng);
    auto inputs = fixtures::random_subset(n, 0.4, rng);
    if (!check_structural_controllability(g, inputs)) continue;
    for (Vertex v = 0; v < n; ++v) {
      if (std::find(inputs.begin(), inputs.end(), v) != inputs.end()) continue;
      auto more = inputs;
      more.push_back(v);
      std::sort(more.begin(), more.end());
      CHECK(check_structural_controllability(g, more));
    }
  }
}

TEST_CASE("property: structural and numeric checks agree on small graphs") {
  std::mt19937_64 rng(62);
  int agree = 0, total = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Vertex n = 1 + static_cast<Vertex>(trial % 6);
    const auto g = random_digraph(n, 0.35, rng);
    const auto inputs = fixtures::random_subset(n, 0.4, rng);
    const bool structural = check_structural_controllability(g, inputs);
    const bool numeric = numeric_rank_spot_check(g, inputs, 5, static_cast<std::uint64_t>(trial));
    // Numeric rank can never exceed generic rank.
    if (numeric) CHECK(structural);
    agree += structural == numeric ? 1 : 0;
    ++total;
  }
  CHECK(agree == total);
}

#pragma once

// Slow, independent verifiers. None of them calls into the matching, flow
// graph or augmentation code; they exist to check those.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "minctrl/graph.hpp"

namespace minctrl::oracle {

inline constexpr Vertex kDefaultMatchingBound = 10;
inline constexpr Vertex kDefaultSubsetBound = 6;
inline constexpr Vertex kNumericRankBound = 20;

/// Structural controllability of xdot = A x + B(I) u.
///
/// Builds the partitioned graph with one input node per member of `inputs` and
/// checks that every state is reachable from an input and that some matching
/// leaves no state unmatched (augmenting-path search, not Hopcroft-Karp).
bool check_structural_controllability(const SparseDigraph& g, std::span<const Vertex> inputs);

/// Minimum cost over all allowed matchings by exhaustive enumeration, or nullopt
/// when there is no allowed matching. Source components come from pairwise
/// reachability. Throws BoundExceeded when n > bound.
std::optional<std::int64_t> brute_force_min_cost_allowed_matching(const SparseDigraph& g,
                                                                  std::span<const Vertex> forbidden,
                                                                  Vertex bound = kDefaultMatchingBound);

/// Smallest I outside `forbidden` that passes check_structural_controllability,
/// scanning subsets by size then lexicographically. Throws BoundExceeded when n > bound.
std::optional<std::pair<std::int64_t, std::vector<Vertex>>> brute_force_min_input_set(
    const SparseDigraph& g, std::span<const Vertex> forbidden, Vertex bound = kDefaultSubsetBound);

/// Samples `trials` realizations with nonzeros uniform in [0.5, 1.5] and reports
/// whether any Kalman matrix [B, AB, ..., A^(n-1) B] has numeric rank n. Singular
/// values count when above n * eps * sigma_max. Throws BoundExceeded for n > 20.
bool numeric_rank_spot_check(const SparseDigraph& g, std::span<const Vertex> inputs, int trials,
                             std::uint64_t seed);

}  // namespace minctrl::oracle

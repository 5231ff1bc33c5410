#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

/// A bipartition of V(h) as a +-1 vector, with its size cached.
struct Cut {
  std::vector<std::int8_t> assignment;
  std::int64_t size = 0;
};

/// Number of edges {i, j} of h with x_i != x_j. Throws std::invalid_argument
/// on a length mismatch or an entry outside {-1, +1}.
std::int64_t cut_size(const Graph& h, std::span<const std::int8_t> x);

Cut make_cut(const Graph& h, std::vector<std::int8_t> x);

/// Flips single vertices while that strictly grows the cut, always taking
/// the lowest-indexed improving vertex; returns a 1-opt local maximum.
Cut local_search_improve(const Graph& h, Cut cut);

inline constexpr int kBruteForceMaxVertices = 28;

/// Exact maximum cut by enumerating 2^(n-1) sign patterns with vertex 0
/// fixed to +1. Throws std::invalid_argument above kBruteForceMaxVertices.
Cut brute_force_maxcut(const Graph& h);

}  // namespace folkman

#pragma once

#include <cstdint>
#include <array>
#include <random>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman::testing {

/// G(n, p) with a seeded generator.
inline Graph random_graph(Vertex n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

/// Triangle count over all vertex triples.
inline std::int64_t naive_triangles(const Graph& g) {
  std::int64_t t = 0;
  const Vertex n = g.num_vertices();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) ++t;
  return t;
}

inline bool naive_has_k4(const Graph& g) {
  const Vertex n = g.num_vertices();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d)
          if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(a, d) && g.has_edge(b, c) &&
              g.has_edge(b, d) && g.has_edge(c, d))
            return true;
  return false;
}

/// Exhaustive arrowing truth: every 2-coloring of E(g) has a monochromatic
/// triangle. Feasible for up to about 20 edges.
inline bool arrows_by_exhaustion(const Graph& g) {
  const auto m = static_cast<int>(g.num_edges());
  std::vector<std::array<EdgeId, 3>> tri;
  const Vertex n = g.num_vertices();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))
          tri.push_back({g.edge_index(a, b), g.edge_index(a, c), g.edge_index(b, c)});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    bool mono = false;
    for (const auto& t : tri) {
      const auto x = (mask >> t[0]) & 1, y = (mask >> t[1]) & 1, z = (mask >> t[2]) & 1;
      if (x == y && y == z) {
        mono = true;
        break;
      }
    }
    if (!mono) return false;
  }
  return true;
}

}  // namespace folkman::testing

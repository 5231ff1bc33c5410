#include "folkman/cut.hpp"

#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace folkman {

std::int64_t cut_size(const Graph& h, std::span<const std::int8_t> x) {
  if (static_cast<std::int64_t>(x.size()) != h.num_vertices()) {
    throw std::invalid_argument("cut_size: assignment has " + std::to_string(x.size()) +
                                " entries for " + std::to_string(h.num_vertices()) + " vertices");
  }
  for (auto s : x) {
    if (s != 1 && s != -1) throw std::invalid_argument("cut_size: entries must be +1 or -1");
  }
  std::int64_t size = 0;
  for (const Edge& e : h.edges()) size += x[e.u] != x[e.v];
  return size;
}

Cut make_cut(const Graph& h, std::vector<std::int8_t> x) {
  Cut c;
  c.size = cut_size(h, x);
  c.assignment = std::move(x);
  return c;
}

Cut local_search_improve(const Graph& h, Cut cut) {
  const Vertex n = h.num_vertices();
  cut.size = cut_size(h, cut.assignment);
  auto& x = cut.assignment;
  // gain[v] = change in cut size if v is flipped = same-side minus cross.
  std::vector<std::int32_t> gain(static_cast<std::size_t>(n), 0);
  std::set<Vertex> improving;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : h.neighbors(v)) gain[v] += x[v] == x[w] ? 1 : -1;
    if (gain[v] > 0) improving.insert(v);
  }
  while (!improving.empty()) {
    const Vertex v = *improving.begin();
    improving.erase(improving.begin());
    cut.size += gain[v];
    x[v] = static_cast<std::int8_t>(-x[v]);
    gain[v] = -gain[v];
    for (Vertex w : h.neighbors(v)) {
      // The edge {v, w} switched between same-side and cross.
      gain[w] += x[v] == x[w] ? 2 : -2;
      if (gain[w] > 0) {
        improving.insert(w);
      } else {
        improving.erase(w);
      }
    }
  }
  return cut;
}

Cut brute_force_maxcut(const Graph& h) {
  const Vertex n = h.num_vertices();
  if (n > kBruteForceMaxVertices) {
    throw std::invalid_argument("brute_force_maxcut: " + std::to_string(n) + " vertices exceeds " +
                                std::to_string(kBruteForceMaxVertices));
  }
  Cut best;
  best.assignment.assign(static_cast<std::size_t>(n), 1);
  if (n <= 1) return best;

  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (const Edge& e : h.edges()) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  // Gray code over vertices 1..n-1; bit set = vertex on the -1 side.
  std::uint32_t side = 0, best_side = 0;
  std::int64_t size = 0, best_size = 0;
  const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 1; k < patterns; ++k) {
    const int v = std::countr_zero(k) + 1;
    const std::uint32_t bit = 1u << v;
    const int same = std::popcount(nbr[v] & ((side & bit) ? side : ~side));
    const int degree = std::popcount(nbr[v]);
    size += 2 * same - degree;
    side ^= bit;
    if (size > best_size) {
      best_size = size;
      best_side = side;
    }
  }
  for (Vertex v = 0; v < n; ++v) best.assignment[v] = (best_side >> v) & 1u ? -1 : 1;
  best.size = best_size;
  return best;
}

}  // namespace folkman

#include "folkman/triangles.hpp"

#include <algorithm>
#include <string>

namespace folkman {

namespace {

std::string describe_k4(const std::array<Vertex, 4>& w) {
  return "graph contains K4 on {" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
         std::to_string(w[2]) + "," + std::to_string(w[3]) + "}";
}

// Calls visit(u, v, w, e_uv, e_uw, e_vw) for every triangle u < v < w, in
// lexicographic order of (u, v, w).
template <typename Visit>
void for_each_triangle(const Graph& g, Visit&& visit) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    auto hu = g.higher_neighbors(u);
    const EdgeId base_u = g.first_edge_of(u);
    for (std::size_t iv = 0; iv < hu.size(); ++iv) {
      const Vertex v = hu[iv];
      auto hv = g.higher_neighbors(v);
      const EdgeId base_v = g.first_edge_of(v);
      std::size_t a = iv + 1, b = 0;
      while (a < hu.size() && b < hv.size()) {
        if (hu[a] < hv[b]) {
          ++a;
        } else if (hv[b] < hu[a]) {
          ++b;
        } else {
          visit(u, v, hu[a], base_u + static_cast<EdgeId>(iv), base_u + static_cast<EdgeId>(a),
                base_v + static_cast<EdgeId>(b));
          ++a;
          ++b;
        }
      }
    }
  }
}

}  // namespace

K4FoundError::K4FoundError(std::array<Vertex, 4> witness)
    : GraphError(describe_k4(witness)), witness_(witness) {}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for_each_triangle(g, [&](Vertex u, Vertex v, Vertex w, EdgeId uv, EdgeId uw, EdgeId vw) {
    out.push_back({uv, uw, vw, u, v, w});
  });
  return out;
}

std::int64_t count_triangles(const Graph& g) {
  std::int64_t count = 0;
  for_each_triangle(g, [&](Vertex, Vertex, Vertex, EdgeId, EdgeId, EdgeId) { ++count; });
  return count;
}

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g) {
  std::vector<Vertex> common;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    auto hu = g.higher_neighbors(u);
    for (std::size_t iv = 0; iv < hu.size(); ++iv) {
      const Vertex v = hu[iv];
      auto hv = g.higher_neighbors(v);
      common.clear();
      std::set_intersection(hu.begin() + static_cast<std::ptrdiff_t>(iv) + 1, hu.end(), hv.begin(),
                            hv.end(), std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (g.has_edge(common[i], common[j])) {
            return std::array<Vertex, 4>{u, v, common[i], common[j]};
          }
        }
      }
    }
  }
  return std::nullopt;
}

TriangleGraph build_triangle_graph(const Graph& g, K4Policy policy) {
  if (policy == K4Policy::kReject) {
    if (auto k4 = find_k4(g)) throw K4FoundError(*k4);
  }
  TriangleGraph tg;
  tg.host = g;
  tg.triangles = enumerate_triangles(g);
  std::vector<Edge> edges;
  edges.reserve(tg.triangles.size() * 3);
  for (const Triangle& t : tg.triangles) {
    edges.push_back({t.e1, t.e2});
    edges.push_back({t.e1, t.e3});
    edges.push_back({t.e2, t.e3});
  }
  tg.h = Graph(static_cast<Vertex>(g.num_edges()), std::move(edges));
  return tg;
}

EdgeColoring coloring_from_cut(const TriangleGraph& tg, std::span<const std::int8_t> signs) {
  if (static_cast<std::int64_t>(signs.size()) != tg.host.num_edges()) {
    throw std::invalid_argument("cut has " + std::to_string(signs.size()) +
                                " entries but the host graph has " +
                                std::to_string(tg.host.num_edges()) + " edges");
  }
  EdgeColoring c;
  c.color.reserve(signs.size());
  for (std::int8_t s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("cut entries must be +1 or -1");
    c.color.push_back(s == 1 ? 0 : 1);
  }
  return c;
}

std::vector<std::int8_t> cut_from_coloring(const EdgeColoring& coloring) {
  std::vector<std::int8_t> signs;
  signs.reserve(coloring.color.size());
  for (auto c : coloring.color) signs.push_back(c == 0 ? 1 : -1);
  return signs;
}

std::int64_t count_monochromatic_triangles(const Graph& g, const EdgeColoring& coloring) {
  if (static_cast<std::int64_t>(coloring.color.size()) != g.num_edges()) {
    throw std::invalid_argument("coloring size does not match edge count");
  }
  std::int64_t mono = 0;
  const auto& c = coloring.color;
  for_each_triangle(g, [&](Vertex, Vertex, Vertex, EdgeId uv, EdgeId uw, EdgeId vw) {
    if (c[uv] == c[uw] && c[uw] == c[vw]) ++mono;
  });
  return mono;
}

}  // namespace folkman

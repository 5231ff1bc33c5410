#include "folkman/graph.hpp"

#include <algorithm>

namespace folkman {

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw GraphError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} out of range for n = " + std::to_string(n));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," +
                     std::to_string(dup->v) + "}");
  }

  std::vector<std::int64_t> deg(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(static_cast<std::size_t>(offsets_[n]));

  // Lower neighbors are written first, in ascending order, because edges are
  // scanned in lexicographic order; higher neighbors follow, also ascending.
  std::vector<std::int64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) adj_[fill[e.v]++] = e.u;
  higher_begin_ = fill;
  first_edge_.assign(static_cast<std::size_t>(n) + 1, 0);
  EdgeId idx = 0;
  for (Vertex v = 0; v <= n; ++v) {
    first_edge_[v] = idx;
    if (v == n) break;
    while (idx < static_cast<EdgeId>(edges_.size()) && edges_[idx].u == v) {
      adj_[fill[v]++] = edges_[idx].v;
      ++idx;
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

EdgeId Graph::edge_index(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  if (u > v) std::swap(u, v);
  auto hi = higher_neighbors(u);
  auto it = std::lower_bound(hi.begin(), hi.end(), v);
  if (it == hi.end() || *it != v) return -1;
  return first_edge_[u] + static_cast<EdgeId>(it - hi.begin());
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
  return Graph(n, std::move(edges));
}

RelabeledGraph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  if (keep.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw GraphError("keep mask size does not match vertex count");
  }
  RelabeledGraph out;
  std::vector<Vertex> new_label(keep.size(), -1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (keep[v]) {
      new_label[v] = static_cast<Vertex>(out.original_label.size());
      out.original_label.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) edges.push_back({new_label[e.u], new_label[e.v]});
  }
  out.graph = Graph(static_cast<Vertex>(out.original_label.size()), std::move(edges));
  return out;
}

}  // namespace folkman

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace folkman {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised on malformed graph input (self-loops, duplicates, bad labels).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in canonical order: each edge is stored as (min, max) and
/// the edge list is sorted lexicographically. The position of an edge in that
/// list is its edge index, which is what the triangle graph uses as vertex
/// labels. Adjacency is stored in CSR form with sorted neighbor lists.
class Graph {
 public:
  Graph() = default;

  /// Builds from an arbitrary edge list. Endpoint order does not matter;
  /// self-loops, duplicates and out-of-range labels throw GraphError.
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex num_vertices() const { return n_; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  /// Neighbors with a label greater than v.
  std::span<const Vertex> higher_neighbors(Vertex v) const {
    return {adj_.data() + higher_begin_[v], adj_.data() + offsets_[v + 1]};
  }
  std::int32_t degree(Vertex v) const {
    return static_cast<std::int32_t>(offsets_[v + 1] - offsets_[v]);
  }

  bool has_edge(Vertex u, Vertex v) const;

  /// Canonical index of edge {u,v}, or -1 if absent.
  EdgeId edge_index(Vertex u, Vertex v) const;

  /// Index of the first edge whose lower endpoint is v.
  EdgeId first_edge_of(Vertex v) const { return first_edge_[v]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> offsets_{0};
  std::vector<std::int64_t> higher_begin_;
  std::vector<EdgeId> first_edge_;
  std::vector<Vertex> adj_;
};

Graph complete_graph(Vertex n);
Graph cycle_graph(Vertex n);

/// Result of an induced-subgraph operation that compacts labels.
struct RelabeledGraph {
  Graph graph;
  /// original_label[new] = old label.
  std::vector<Vertex> original_label;
};

/// Subgraph induced on the vertices where keep[v] is true, relabeled
/// 0..k-1 in ascending order of original label.
RelabeledGraph induced_subgraph(const Graph& g, const std::vector<bool>& keep);

}  // namespace folkman

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

/// A triangle of a host graph, as canonical edge indices with e1 < e2 < e3.
/// The vertex triple a < b < c is kept alongside.
struct Triangle {
  EdgeId e1, e2, e3;
  Vertex a, b, c;
};

/// Thrown when an operation that needs a K4-free graph is handed a K4.
class K4FoundError : public GraphError {
 public:
  explicit K4FoundError(std::array<Vertex, 4> witness);
  const std::array<Vertex, 4>& witness() const { return witness_; }

 private:
  std::array<Vertex, 4> witness_;
};

/// All triangles, each once, ordered by sorted vertex triple.
std::vector<Triangle> enumerate_triangles(const Graph& g);
std::int64_t count_triangles(const Graph& g);

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g);
inline bool is_k4_free(const Graph& g) { return !find_k4(g).has_value(); }

/// H_G together with the data that produced it.
///
/// Vertices of h are the canonical edge indices of host; {e, f} is an edge of
/// h iff e and f lie in a common triangle of host.
struct TriangleGraph {
  Graph host;
  Graph h;
  std::vector<Triangle> triangles;

  std::int64_t num_triangles() const { return static_cast<std::int64_t>(triangles.size()); }
  std::int64_t two_t() const { return 2 * num_triangles(); }
};

enum class K4Policy { kReject, kAllow };

/// Two edges sharing a vertex lie in at most one triangle, so |E(h)| = 3t
/// for every host. kReject (the default) throws K4FoundError on a K4.
TriangleGraph build_triangle_graph(const Graph& g, K4Policy policy = K4Policy::kReject);

/// Color per canonical edge index, each 0 or 1.
struct EdgeColoring {
  std::vector<std::uint8_t> color;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// +1 maps to color 0, -1 to color 1.
EdgeColoring coloring_from_cut(const TriangleGraph& tg, std::span<const std::int8_t> signs);
std::vector<std::int8_t> cut_from_coloring(const EdgeColoring& coloring);

std::int64_t count_monochromatic_triangles(const Graph& g, const EdgeColoring& coloring);

}  // namespace folkman

#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Core>

#include "folkman/cut.hpp"
#include "folkman/graph.hpp"
#include "folkman/triangles.hpp"

namespace folkman {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Unit vectors v_i in R^rank, one row per vertex of h, and the relaxation
/// value 1/2 * sum over edges of (1 - v_i . v_j).
struct VectorAssignment {
  int rank = 0;
  RowMatrix vectors;
  double objective = 0.0;
};

double relaxation_objective(const Graph& h, const RowMatrix& vectors);

/// Euclidean gradient of relaxation_objective: row i is -1/2 * sum_{j~i} v_j.
RowMatrix relaxation_gradient(const Graph& h, const RowMatrix& vectors);

/// Default rank: ceil(sqrt(2n)) capped at 30.
int default_rank(std::int64_t n);

struct AscentOptions {
  int rank = 0;  ///< 0 selects default_rank
  int max_sweeps = 200;
  std::uint64_t seed = 1;
  /// Stop once a full sweep improves the objective by less than this.
  double stall_tolerance = 1e-9;
  std::optional<RowMatrix> start;
};

/// Block-coordinate ascent on the low-rank relaxation: each sweep sets
/// v_i <- -normalize(sum_{j~i} v_j) in vertex order. The objective never
/// decreases. Vertices whose neighbor sum vanishes keep their vector.
VectorAssignment lowrank_ascent(const Graph& h, const AscentOptions& options);
inline VectorAssignment lowrank_ascent(const TriangleGraph& tg, const AscentOptions& options) {
  return lowrank_ascent(tg.h, options);
}

struct RefineOptions {
  int max_iterations = 200;
  /// L-BFGS memory.
  int memory = 6;
  /// Stop when the Riemannian gradient norm falls below this.
  double gradient_tolerance = 1e-6;
};

/// Riemannian L-BFGS on the product of unit spheres, started from va.
/// Monotone in the objective (Armijo backtracking along a retraction).
VectorAssignment lowrank_refine(const Graph& h, VectorAssignment va, const RefineOptions& options);

/// Rows (A V)_i for the adjacency A of h.
RowMatrix neighbor_sums(const Graph& h, const RowMatrix& vectors);

/// Lagrange multipliers z_i = v_i . (A V)_i of the unit-norm constraints.
Eigen::VectorXd sphere_multipliers(const Graph& h, const RowMatrix& vectors);

/// Best of `trials` seeded random-hyperplane roundings.
Cut hyperplane_round(const VectorAssignment& va, const Graph& h, int trials, std::uint64_t seed);

}  // namespace folkman

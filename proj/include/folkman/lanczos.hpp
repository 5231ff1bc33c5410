#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Core>

#include "folkman/sparse_sym_matrix.hpp"

namespace folkman {

enum class Extreme { kMin, kMax };

struct LanczosOptions {
  Extreme which = Extreme::kMin;
  /// Converged when the residual is at most tol * one_norm(A).
  double tol = 1e-8;
  /// Budget in matrix-vector products.
  std::int64_t max_iter = 20000;
  std::uint64_t seed = 1;
  /// Largest Krylov basis held at once; thick restart keeps `keep` Ritz vectors.
  int basis_size = 64;
  int keep = 24;
  /// Optional warm start; mixed with a small seeded random component.
  std::optional<Eigen::VectorXd> start;
};

struct SpectralEstimate {
  double value = 0.0;
  Eigen::VectorXd vector;
  /// ||A x - value x||_2, recomputed explicitly from the returned vector.
  double residual = 0.0;
  std::int64_t iterations = 0;
  bool converged = false;
};

/// Extreme eigenpair by thick-restart Lanczos with full reorthogonalization.
/// Returns the best pair found; `converged` is false if the budget ran out.
SpectralEstimate extreme_eigenpair(const SparseSymMatrix& m, const LanczosOptions& options = {});

/// The `count` most extreme eigenpairs at the requested end, ordered from the
/// extreme inward. Converged when every residual meets the tolerance.
struct EigenBlock {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  Eigen::VectorXd residuals;
  std::int64_t iterations = 0;
  bool converged = false;
};

EigenBlock extreme_eigenpairs(const SparseSymMatrix& m, int count, const LanczosOptions& options = {});

}  // namespace folkman

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "folkman/cut.hpp"
#include "folkman/lanczos.hpp"
#include "folkman/lowrank.hpp"
#include "folkman/spectral_floor.hpp"
#include "folkman/triangles.hpp"

namespace folkman {

enum class BoundMethod { kEig, kDual, kLowRank, kBrute };

const char* to_string(BoundMethod method);

struct BoundReport {
  BoundMethod method = BoundMethod::kEig;
  /// Raw upper bound on MC(h); absent when no bound could be established.
  std::optional<double> upper;
  std::optional<std::int64_t> lower;
  /// Correction vector and eigenvalue floor behind `upper` (EIG: u = 0).
  Eigen::VectorXd u;
  double sigma = 0.0;
  std::optional<Cut> cut;
  bool certified = false;
  CertTier tier = CertTier::kExact;
  /// Numerical tier only: slack between the eigenvalue estimate and sigma.
  double margin = 0.0;
  /// Eigenvalue solves spent.
  int iterations = 0;
  std::string note;

  /// Cut sizes are integers, so floor(upper) is also a bound.
  std::optional<std::int64_t> upper_floor() const;
};

/// |E|/2 - n*sigma/4 + sum(u)/4: a valid MAX-CUT bound whenever sigma is at
/// most lambda_min(A + Diag(u)). The sum(u) term vanishes on the zero-sum
/// hyperplane and keeps the formula valid off it.
double spectral_bound(std::int64_t num_vertices, std::int64_t num_edges, double sigma,
                      double u_sum);

struct EigBoundOptions {
  LanczosOptions lanczos{};
  FloorOptions floor{};
};

/// Eigenvalue bound |E|/2 - lambda_min*n/4 with lambda_min replaced by a
/// certified floor. No upper bound is reported if the eigensolver fails.
BoundReport eig_upper_bound(const TriangleGraph& tg, const EigBoundOptions& options = {});
BoundReport eig_upper_bound(const Graph& h, const EigBoundOptions& options = {});

struct DualOptions {
  /// Dual iterates beyond u = 0, each costing one eigenvalue solve.
  int budget = 24;
  std::uint64_t seed = 1;
  /// Starting rank of the primal factorization; 0 selects default_rank.
  int rank = 0;
  int max_rank = 96;
  /// Riemannian L-BFGS iterations per primal stage.
  int refine_iterations = 150;
  /// Eigenpairs computed per iterate; also the staircase step.
  int block = 8;
  /// Share of the budget reserved for subgradient steps on u.
  double subgradient_share = 0.25;
  /// Stop as soon as an iterate bound falls below this.
  std::optional<double> stop_below;
  /// Stop when the primal relaxation value reaches this: the dual optimum is
  /// at least the primal value, so no iterate can go lower.
  std::optional<double> give_up_at;
  LanczosOptions lanczos{.which = Extreme::kMin, .tol = 1e-8, .max_iter = 8000, .seed = 1,
                         .basis_size = 64, .keep = 24, .start = std::nullopt};
  FloorOptions floor{};
  /// Progress lines, one per eigenvalue solve and primal stage.
  std::function<void(const std::string&)> log;
};

/// Minimizes B(u) = |E|/2 - n*lambda_min(A + Diag(u))/4 over zero-sum u.
/// Iterates come from the multipliers of a low-rank primal solution
/// (u = mean(z) - z with z_i = v_i . (AV)_i) refined by subgradient steps;
/// the best certified iterate is reported and u = 0 is always a candidate.
/// The primal vectors of the last stage are returned through `primal`.
BoundReport dual_upper_bound(const TriangleGraph& tg, const DualOptions& options = {},
                             VectorAssignment* primal = nullptr);
BoundReport dual_upper_bound(const Graph& h, const DualOptions& options = {},
                             VectorAssignment* primal = nullptr);

struct CutSearchOptions {
  int restarts = 16;
  /// 0 selects default_rank.
  int rank = 0;
  int sweeps = 100;
  int trials = 32;
  std::uint64_t seed = 1;
  /// Stop after the first restart whose cut reaches this size.
  std::optional<std::int64_t> target;
  /// Restarts run in batches of this many threads; the result does not
  /// depend on it.
  int threads = 1;
  /// Extra starting vectors to round before the restarts.
  const VectorAssignment* warm = nullptr;
};

/// Seeded low-rank ascent, hyperplane rounding and 1-opt local search.
/// Restart k uses seed + k. Reports the largest cut, preferring the lowest
/// restart index among ties; `lower` is its size.
BoundReport lowrank_lower_bound(const Graph& h, const CutSearchOptions& options);

/// Certifies lambda_min(A + Diag(u)) >= sigma for a trial sigma, lowering it
/// by growing pads until certified or the attempts run out.
struct FloorSearch {
  bool certified = false;
  double sigma = 0.0;
  FloorCertificate certificate;
};
FloorSearch certify_below(const SparseSymMatrix& m, double estimate, double residual,
                          const FloorOptions& options, int attempts = 4);

}  // namespace folkman

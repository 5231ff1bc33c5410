#pragma once

#include <string>

#include "folkman/lanczos.hpp"
#include "folkman/sparse_sym_matrix.hpp"

namespace folkman {

enum class CertTier { kExact, kNumerical };

enum class FloorStatus {
  kCertified,     ///< lambda_min >= sigma established
  kRefuted,       ///< lambda_min < sigma established
  kInconclusive,  ///< could not decide at this sigma; retry lower
};

const char* to_string(CertTier tier);
const char* to_string(FloorStatus status);

struct FloorOptions {
  /// Up to this order the inertia is computed in exact rational arithmetic.
  int rational_max_dim = 64;
  /// Up to this order a floating Cholesky with an a-priori rounding-error
  /// shift is used; the result is still a proof, so the tier is exact.
  int exact_max_dim = 5000;
  /// Eigensolver settings for the numerical tier.
  LanczosOptions lanczos{.which = Extreme::kMin, .tol = 1e-9, .max_iter = 60000, .seed = 7,
                         .basis_size = 64, .keep = 24, .start = std::nullopt};
};

struct FloorCertificate {
  FloorStatus status = FloorStatus::kInconclusive;
  CertTier tier = CertTier::kExact;
  std::string method;
  /// Slack subtracted from the eigenvalue estimate in the numerical tier.
  double margin = 0.0;
  /// Rayleigh-Ritz estimate of lambda_min (numerical tier only).
  double estimate = 0.0;

  bool certified() const { return status == FloorStatus::kCertified; }
};

/// Decides whether lambda_min(m) >= sigma by the inertia of m - sigma*I.
FloorCertificate certify_spectral_floor(const SparseSymMatrix& m, double sigma,
                                        const FloorOptions& options = {});

/// Exact inertia test on small matrices: counts negative pivots of an LDL^T
/// factorization of m - sigma*I over the rationals. sigma and all entries are
/// taken as the exact binary values of their doubles.
FloorStatus rational_floor_test(const SparseSymMatrix& m, double sigma);

/// Floating-point Cholesky of m - (sigma + c)*I where c bounds the rounding
/// error of the factorization; success proves lambda_min(m) > sigma.
FloorStatus verified_cholesky_floor_test(const SparseSymMatrix& m, double sigma);

}  // namespace folkman

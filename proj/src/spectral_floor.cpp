#include "folkman/spectral_floor.hpp"

#include <cfenv>
#include <cmath>
#include <limits>
#include <vector>

#include <gmpxx.h>

namespace folkman {

const char* to_string(CertTier tier) {
  return tier == CertTier::kExact ? "exact" : "numerical";
}

const char* to_string(FloorStatus status) {
  switch (status) {
    case FloorStatus::kCertified:
      return "CERTIFIED";
    case FloorStatus::kRefuted:
      return "REFUTED";
    case FloorStatus::kInconclusive:
      return "INDEFINITE-AT-SIGMA";
  }
  return "?";
}

FloorStatus rational_floor_test(const SparseSymMatrix& m, double sigma) {
  const std::size_t n = static_cast<std::size_t>(m.dim());
  std::vector<mpq_class> a(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return a[i * n + j]; };
  const mpq_class shift(sigma);
  for (std::size_t i = 0; i < n; ++i) {
    at(i, i) = mpq_class(m.diagonal()[static_cast<Eigen::Index>(i)]) - shift;
    auto cols = m.row_columns(static_cast<std::int32_t>(i));
    auto vals = m.row_values(static_cast<std::int32_t>(i));
    for (std::size_t k = 0; k < cols.size(); ++k) at(i, static_cast<std::size_t>(cols[k])) += mpq_class(vals[k]);
  }

  // Symmetric elimination on the upper triangle. Sylvester's law of inertia:
  // the signs of the pivots are the signs of the eigenvalues.
  mpq_class factor;
  for (std::size_t k = 0; k < n; ++k) {
    const mpq_class& pivot = at(k, k);
    const int s = sgn(pivot);
    if (s < 0) return FloorStatus::kRefuted;
    if (s == 0) {
      // A zero pivot with a nonzero off-diagonal entry exposes a 2x2
      // principal block [[0, b], [b, c]] with negative determinant.
      for (std::size_t j = k + 1; j < n; ++j) {
        if (sgn(at(k, j)) != 0) return FloorStatus::kRefuted;
      }
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(at(k, i)) == 0) continue;
      factor = at(k, i) / pivot;
      for (std::size_t j = i; j < n; ++j) {
        if (sgn(at(k, j)) == 0) continue;
        at(i, j) -= factor * at(k, j);
      }
    }
  }
  return FloorStatus::kCertified;
}

FloorStatus verified_cholesky_floor_test(const SparseSymMatrix& m, double sigma) {
  const Eigen::Index n = m.dim();
  using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  // Diagonal of m - sigma*I rounded toward -inf, so the floating matrix is
  // dominated by the exact one in the Loewner order.
  Eigen::VectorXd diag(n);
  {
    const int old = std::fegetround();
    std::fesetround(FE_DOWNWARD);
    for (Eigen::Index i = 0; i < n; ++i) {
      volatile double d = m.diagonal()[i];
      diag[i] = d - sigma;
    }
    std::fesetround(old);
  }
  double trace = 0.0, max_diag = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (diag[i] <= 0.0) return diag[i] < 0.0 ? FloorStatus::kRefuted : FloorStatus::kInconclusive;
    trace += diag[i];
    max_diag = std::max(max_diag, diag[i]);
  }

  // Rump's sufficient shift for floating Cholesky, doubled.
  const double u = std::numeric_limits<double>::epsilon() / 2;
  const double eta = std::numeric_limits<double>::denorm_min();
  const double nn = static_cast<double>(n);
  const double gamma = (nn + 1) * u / (1 - (nn + 1) * u);
  const double c = 2.0 * (gamma / (1 - 2 * gamma) * trace * (1 + 4 * u) +
                          4 * nn * (2 * (nn + 2) + max_diag) * eta);

  RowMatrix l = RowMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    auto cols = m.row_columns(static_cast<std::int32_t>(i));
    auto vals = m.row_values(static_cast<std::int32_t>(i));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] < i) l(i, cols[k]) += vals[k];
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      const double s = l.row(i).head(j).dot(l.row(j).head(j));
      l(i, j) = (l(i, j) - s) / l(j, j);
    }
    const double d = diag[i] - c - l.row(i).head(i).squaredNorm();
    if (!(d > 0.0)) return FloorStatus::kInconclusive;
    l(i, i) = std::sqrt(d);
  }
  return FloorStatus::kCertified;
}

FloorCertificate certify_spectral_floor(const SparseSymMatrix& m, double sigma,
                                        const FloorOptions& options) {
  if (m.dim() < 1) throw std::invalid_argument("certify_spectral_floor: empty matrix");
  FloorCertificate cert;
  if (m.dim() <= options.rational_max_dim) {
    cert.tier = CertTier::kExact;
    cert.method = "rational-ldl";
    cert.status = rational_floor_test(m, sigma);
    return cert;
  }
  if (m.dim() <= options.exact_max_dim) {
    cert.tier = CertTier::kExact;
    cert.method = "verified-cholesky";
    cert.status = verified_cholesky_floor_test(m, sigma);
    return cert;
  }

  // Too large to factor: the Rayleigh-Ritz value is an upper bound on
  // lambda_min, and an eigenvalue lies within the residual of it.
  cert.tier = CertTier::kNumerical;
  cert.method = "lanczos-residual";
  LanczosOptions lo = options.lanczos;
  lo.which = Extreme::kMin;
  SpectralEstimate est = extreme_eigenpair(m, lo);
  cert.estimate = est.value;
  cert.margin = est.residual + 1e-10 * std::max(1.0, m.one_norm());
  if (est.value < sigma) {
    cert.status = FloorStatus::kRefuted;
  } else if (est.value - cert.margin >= sigma) {
    cert.status = FloorStatus::kCertified;
  } else {
    cert.status = FloorStatus::kInconclusive;
  }
  return cert;
}

}  // namespace folkman

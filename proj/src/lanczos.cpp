#include "folkman/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace folkman {

namespace {

Eigen::VectorXd random_unit(std::int32_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(n);
  for (std::int32_t i = 0; i < n; ++i) v[i] = normal(rng);
  return v.normalized();
}

// Two passes of classical Gram-Schmidt against the first `cols` columns.
// Returns the accumulated coefficients.
Eigen::VectorXd orthogonalize(const Eigen::MatrixXd& basis, Eigen::Index cols, Eigen::VectorXd& w) {
  if (cols == 0) return Eigen::VectorXd();
  auto b = basis.leftCols(cols);
  Eigen::VectorXd h = b.transpose() * w;
  w.noalias() -= b * h;
  Eigen::VectorXd h2 = b.transpose() * w;
  w.noalias() -= b * h2;
  return h + h2;
}

// Thick-restart Lanczos on sign * m for its `count` smallest eigenpairs.
// The projected matrix T = V^T (sign * m) V is accumulated column by column
// from the Gram-Schmidt coefficients, so Rayleigh-Ritz stays valid after
// restarts and random injections.
EigenBlock thick_restart(const SparseSymMatrix& m, int count, const LanczosOptions& opt) {
  const std::int32_t n = m.dim();
  if (n < 1) throw std::invalid_argument("extreme_eigenpair: empty matrix");
  if (!(opt.tol > 0)) throw std::invalid_argument("extreme_eigenpair: tol must be positive");
  const int nev = std::clamp(count, 1, static_cast<int>(n));

  const double sign = opt.which == Extreme::kMin ? 1.0 : -1.0;
  const double norm = m.one_norm();
  const double target = opt.tol * norm;
  const double breakdown = 1e-12 * std::max(norm, std::numeric_limits<double>::min());

  EigenBlock out;
  if (n == 1) {
    out.values = m.diagonal();
    out.vectors = Eigen::MatrixXd::Ones(1, 1);
    out.residuals = Eigen::VectorXd::Zero(1);
    out.converged = true;
    return out;
  }

  const int basis = std::clamp(std::max(opt.basis_size, 2 * nev + 8), 2, static_cast<int>(n));
  const int keep = std::clamp(std::max(opt.keep, nev + 4), std::min(nev, basis - 1), basis - 1);
  std::mt19937_64 rng(opt.seed);

  Eigen::MatrixXd v(n, basis + 1);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(basis + 1, basis + 1);
  Eigen::VectorXd w(n);

  if (opt.start && opt.start->size() == n && opt.start->norm() > 0) {
    Eigen::VectorXd s = opt.start->normalized();
    v.col(0) = (s + 1e-3 * random_unit(n, rng)).normalized();
  } else {
    v.col(0) = random_unit(n, rng);
  }

  auto apply = [&](const Eigen::Ref<const Eigen::VectorXd>& x, Eigen::VectorXd& y) {
    m.multiply(x, y);
    if (sign < 0) y = -y;
    ++out.iterations;
  };

  auto finish = [&](const Eigen::VectorXd& theta, const Eigen::MatrixXd& y, int used) {
    out.values = sign * theta.head(nev);
    out.vectors = v.leftCols(used) * y.leftCols(nev);
    out.residuals.resize(nev);
    Eigen::VectorXd ax(n);
    for (int i = 0; i < nev; ++i) {
      out.vectors.col(i).normalize();
      apply(out.vectors.col(i), ax);
      out.residuals[i] = (ax - theta[i] * out.vectors.col(i)).norm();
    }
    out.converged = out.residuals.maxCoeff() <= target;
  };

  int k = 0;
  double best_estimate = std::numeric_limits<double>::infinity();
  int stalled = 0;

  while (true) {
    int used = basis;
    double last_beta = 0.0;
    for (int j = k; j < basis; ++j) {
      apply(v.col(j), w);
      Eigen::VectorXd h = orthogonalize(v, j + 1, w);
      t.block(0, j, j + 1, 1) = h;
      t.block(j, 0, 1, j + 1) = h.transpose();
      const double beta = w.norm();
      if (j + 1 == n) {
        used = n;
        last_beta = 0.0;
        break;
      }
      if (beta <= breakdown) {
        // Invariant subspace: continue the basis with a fresh direction.
        Eigen::VectorXd r = random_unit(n, rng);
        orthogonalize(v, j + 1, r);
        v.col(j + 1) = r.normalized();
        t(j + 1, j) = t(j, j + 1) = 0.0;
        last_beta = 0.0;
      } else {
        v.col(j + 1) = w / beta;
        t(j + 1, j) = t(j, j + 1) = beta;
        last_beta = beta;
      }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t.topLeftCorner(used, used));
    const Eigen::VectorXd& theta = eig.eigenvalues();
    const Eigen::MatrixXd& y = eig.eigenvectors();
    double estimate = 0.0;
    for (int i = 0; i < nev; ++i) estimate = std::max(estimate, last_beta * std::abs(y(used - 1, i)));
    const bool exhausted = out.iterations >= opt.max_iter;
    const bool full_space = used == n;

    if (estimate <= target || exhausted || full_space) {
      finish(theta, y, used);
      if (out.converged || exhausted) return out;
      if (full_space) {
        // The whole space is spanned; the Rayleigh-Ritz pairs are as good as
        // floating point allows.
        out.converged = out.residuals.maxCoeff() <= std::max(target, 1e-11 * norm * std::sqrt(n));
        return out;
      }
    }

    if (estimate < 0.9 * best_estimate) {
      best_estimate = estimate;
      stalled = 0;
    } else {
      ++stalled;
    }

    // Thick restart: keep the lowest Ritz vectors plus the residual direction.
    const int kk = std::min(keep, used - 1);
    Eigen::MatrixXd kept = v.leftCols(used) * y.leftCols(kk);
    v.leftCols(kk) = kept;
    if (stalled >= 20) {
      Eigen::VectorXd r = random_unit(n, rng);
      orthogonalize(v, kk, r);
      v.col(kk) = r.normalized();
      stalled = 0;
      best_estimate = std::numeric_limits<double>::infinity();
    } else {
      v.col(kk) = v.col(used);
    }
    t.setZero();
    for (int i = 0; i < kk; ++i) t(i, i) = theta[i];
    k = kk;
  }
}

}  // namespace

EigenBlock extreme_eigenpairs(const SparseSymMatrix& m, int count, const LanczosOptions& options) {
  return thick_restart(m, count, options);
}

SpectralEstimate extreme_eigenpair(const SparseSymMatrix& m, const LanczosOptions& options) {
  EigenBlock block = thick_restart(m, 1, options);
  SpectralEstimate est;
  est.value = block.values[0];
  est.vector = block.vectors.col(0);
  est.residual = block.residuals[0];
  est.iterations = block.iterations;
  est.converged = block.converged;
  return est;
}

}  // namespace folkman

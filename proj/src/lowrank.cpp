#include "folkman/lowrank.hpp"

#include <algorithm>
#include <deque>
#include <cmath>
#include <random>
#include <stdexcept>

namespace folkman {

double relaxation_objective(const Graph& h, const RowMatrix& vectors) {
  double total = 0.0;
  for (const Edge& e : h.edges()) total += 1.0 - vectors.row(e.u).dot(vectors.row(e.v));
  return 0.5 * total;
}

RowMatrix relaxation_gradient(const Graph& h, const RowMatrix& vectors) {
  RowMatrix grad = RowMatrix::Zero(vectors.rows(), vectors.cols());
  for (Vertex i = 0; i < h.num_vertices(); ++i) {
    for (Vertex j : h.neighbors(i)) grad.row(i) -= 0.5 * vectors.row(j);
  }
  return grad;
}

int default_rank(std::int64_t n) {
  const int r = static_cast<int>(std::ceil(std::sqrt(2.0 * static_cast<double>(n))));
  return std::clamp(r, 1, 30);
}

VectorAssignment lowrank_ascent(const Graph& h, const AscentOptions& options) {
  const Vertex n = h.num_vertices();
  VectorAssignment va;
  va.rank = options.rank > 0 ? options.rank : default_rank(n);
  if (options.start) {
    if (options.start->rows() != n) throw std::invalid_argument("lowrank_ascent: bad start shape");
    va.vectors = *options.start;
    va.rank = static_cast<int>(va.vectors.cols());
    va.vectors.rowwise().normalize();
  } else {
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal;
    va.vectors.resize(n, va.rank);
    for (Eigen::Index i = 0; i < va.vectors.size(); ++i) va.vectors.data()[i] = normal(rng);
    va.vectors.rowwise().normalize();
  }

  Eigen::RowVectorXd sum(va.rank);
  double objective = relaxation_objective(h, va.vectors);
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    for (Vertex i = 0; i < n; ++i) {
      sum.setZero();
      for (Vertex j : h.neighbors(i)) sum += va.vectors.row(j);
      const double norm = sum.norm();
      if (norm > 1e-12) va.vectors.row(i) = -sum / norm;
    }
    const double next = relaxation_objective(h, va.vectors);
    const double gain = next - objective;
    objective = next;
    if (gain < options.stall_tolerance * std::max(1.0, objective)) break;
  }
  va.objective = objective;
  return va;
}

Cut hyperplane_round(const VectorAssignment& va, const Graph& h, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("hyperplane_round: trials must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Cut best;
  best.size = -1;
  Eigen::VectorXd normal_vec(va.rank);
  std::vector<std::int8_t> x(static_cast<std::size_t>(h.num_vertices()));
  for (int t = 0; t < trials; ++t) {
    for (int k = 0; k < va.rank; ++k) normal_vec[k] = normal(rng);
    Eigen::VectorXd side = va.vectors * normal_vec;
    for (Vertex i = 0; i < h.num_vertices(); ++i) x[i] = side[i] >= 0 ? 1 : -1;
    const std::int64_t size = cut_size(h, x);
    if (size > best.size) {
      best.size = size;
      best.assignment = x;
    }
  }
  return best;
}

}  // namespace folkman

namespace folkman {

namespace {

void neighbor_sums_into(const Graph& h, const RowMatrix& v, RowMatrix& out) {
  const Eigen::Index r = v.cols();
  out.resize(v.rows(), r);
  for (Vertex i = 0; i < h.num_vertices(); ++i) {
    double* dst = out.data() + static_cast<Eigen::Index>(i) * r;
    std::fill(dst, dst + r, 0.0);
    for (Vertex j : h.neighbors(i)) {
      const double* src = v.data() + static_cast<Eigen::Index>(j) * r;
      for (Eigen::Index k = 0; k < r; ++k) dst[k] += src[k];
    }
  }
}

// Projection of x onto the tangent space of the sphere product at v.
RowMatrix tangent(const RowMatrix& v, const RowMatrix& x) {
  RowMatrix p = x;
  const Eigen::VectorXd radial = v.cwiseProduct(x).rowwise().sum();
  p -= radial.asDiagonal() * v;
  return p;
}

double inner(const RowMatrix& a, const RowMatrix& b) { return (a.array() * b.array()).sum(); }

}  // namespace

RowMatrix neighbor_sums(const Graph& h, const RowMatrix& vectors) {
  RowMatrix out;
  neighbor_sums_into(h, vectors, out);
  return out;
}

Eigen::VectorXd sphere_multipliers(const Graph& h, const RowMatrix& vectors) {
  RowMatrix sums;
  neighbor_sums_into(h, vectors, sums);
  return vectors.cwiseProduct(sums).rowwise().sum();
}

VectorAssignment lowrank_refine(const Graph& h, VectorAssignment va, const RefineOptions& options) {
  // Minimizes f(V) = 1/2 tr(V^T A V) = sum over edges of v_i . v_j, which is
  // the same as maximizing the relaxation value |E|/2 - f/2.
  RowMatrix& v = va.vectors;
  v.rowwise().normalize();
  RowMatrix av;
  neighbor_sums_into(h, v, av);
  double f = 0.5 * inner(v, av);
  RowMatrix grad = tangent(v, av);

  std::deque<std::pair<RowMatrix, RowMatrix>> history;
  RowMatrix trial, trial_av;
  for (int it = 0; it < options.max_iterations; ++it) {
    if (grad.norm() < options.gradient_tolerance) break;

    // Two-loop recursion.
    RowMatrix q = grad;
    std::vector<double> alpha(history.size());
    for (int k = static_cast<int>(history.size()) - 1; k >= 0; --k) {
      const auto& [s, y] = history[static_cast<std::size_t>(k)];
      alpha[static_cast<std::size_t>(k)] = inner(s, q) / inner(s, y);
      q -= alpha[static_cast<std::size_t>(k)] * y;
    }
    const double scale = history.empty()
                             ? 0.1
                             : inner(history.back().first, history.back().second) /
                                   inner(history.back().second, history.back().second);
    q *= scale;
    for (std::size_t k = 0; k < history.size(); ++k) {
      const auto& [s, y] = history[k];
      const double beta = inner(y, q) / inner(s, y);
      q += (alpha[k] - beta) * s;
    }
    RowMatrix direction = -tangent(v, q);
    double slope = inner(grad, direction);
    if (slope >= 0) {
      direction = -grad;
      slope = inner(grad, direction);
      history.clear();
    }

    double step = 1.0;
    double f_trial = f;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      trial = v + step * direction;
      trial.rowwise().normalize();
      neighbor_sums_into(h, trial, trial_av);
      f_trial = 0.5 * inner(trial, trial_av);
      if (f_trial <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    RowMatrix grad_next = tangent(trial, trial_av);
    RowMatrix s = tangent(trial, step * direction);
    RowMatrix y = grad_next - tangent(trial, grad);
    for (auto& [hs, hy] : history) {
      hs = tangent(trial, hs);
      hy = tangent(trial, hy);
    }
    if (inner(s, y) > 1e-12) {
      history.emplace_back(std::move(s), std::move(y));
      if (static_cast<int>(history.size()) > options.memory) history.pop_front();
    }
    v.swap(trial);
    av.swap(trial_av);
    f = f_trial;
    grad = std::move(grad_next);
  }
  va.objective = 0.5 * static_cast<double>(h.num_edges()) - 0.5 * f;
  return va;
}

}  // namespace folkman

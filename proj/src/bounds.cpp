#include "folkman/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

namespace folkman {

const char* to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::kEig:
      return "EIG";
    case BoundMethod::kDual:
      return "DUAL";
    case BoundMethod::kLowRank:
      return "LOWRANK";
    case BoundMethod::kBrute:
      return "BRUTE";
  }
  return "?";
}

std::optional<std::int64_t> BoundReport::upper_floor() const {
  if (!upper) return std::nullopt;
  return static_cast<std::int64_t>(std::floor(*upper));
}

double spectral_bound(std::int64_t num_vertices, std::int64_t num_edges, double sigma,
                      double u_sum) {
  return 0.5 * static_cast<double>(num_edges) - 0.25 * static_cast<double>(num_vertices) * sigma +
         0.25 * u_sum;
}

FloorSearch certify_below(const SparseSymMatrix& m, double estimate, double residual,
                          const FloorOptions& options, int attempts) {
  FloorSearch out;
  double pad = residual + 1e-9 * std::max(1.0, m.one_norm());
  for (int a = 0; a < attempts; ++a) {
    out.sigma = estimate - pad;
    out.certificate = certify_spectral_floor(m, out.sigma, options);
    if (out.certificate.certified()) {
      out.certified = true;
      return out;
    }
    pad *= 100.0;
  }
  return out;
}

BoundReport eig_upper_bound(const Graph& h, const EigBoundOptions& options) {
  BoundReport report;
  report.method = BoundMethod::kEig;
  const std::int64_t n = h.num_vertices();
  report.u = Eigen::VectorXd::Zero(n);
  if (n == 0) {
    report.upper = 0.0;
    report.certified = true;
    return report;
  }
  const SparseSymMatrix a = SparseSymMatrix::adjacency(h);
  LanczosOptions lo = options.lanczos;
  lo.which = Extreme::kMin;
  const SpectralEstimate est = extreme_eigenpair(a, lo);
  report.iterations = 1;
  if (!est.converged) {
    report.note = "eigensolver did not converge; no upper bound claimed";
    return report;
  }
  FloorOptions fo = options.floor;
  fo.lanczos.start = est.vector;
  const FloorSearch fs = certify_below(a, est.value, est.residual, fo);
  if (!fs.certified) {
    report.note = std::string("eigenvalue floor not certified: ") + to_string(fs.certificate.status);
    return report;
  }
  report.sigma = fs.sigma;
  report.certified = true;
  report.tier = fs.certificate.tier;
  report.margin = est.value - fs.sigma;
  report.upper = spectral_bound(n, h.num_edges(), fs.sigma, 0.0);
  return report;
}

BoundReport eig_upper_bound(const TriangleGraph& tg, const EigBoundOptions& options) {
  return eig_upper_bound(tg.h, options);
}

namespace {

struct Iterate {
  Eigen::VectorXd u;
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  double residual = 0.0;
  double bound = std::numeric_limits<double>::infinity();
};

class DualSolver {
 public:
  DualSolver(const Graph& h, const DualOptions& options)
      : h_(h), options_(options), a_(SparseSymMatrix::adjacency(h)) {}

  BoundReport run(VectorAssignment* primal);

 private:
  // Evaluates B(u); nullopt if the eigensolver did not converge.
  std::optional<Iterate> evaluate(const Eigen::VectorXd& u, int block);
  void consider(Iterate it);
  bool stop() const {
    return (options_.stop_below && best_.bound < *options_.stop_below) || gave_up_;
  }
  void primal_phase(int iterates, VectorAssignment* primal);
  void subgradient_phase(int iterates);
  BoundReport certify();
  void log(const char* fmt, auto... args) const {
    if (!options_.log) return;
    char buf[256];
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const int k = std::snprintf(buf, sizeof buf, "[%8.1fs] ", t);
    std::snprintf(buf + k, sizeof buf - static_cast<std::size_t>(k), fmt, args...);
    options_.log(buf);
  }

  const Graph& h_;
  DualOptions options_;
  SparseSymMatrix a_;
  Iterate best_;
  Iterate zero_;
  std::optional<Eigen::VectorXd> warm_;
  int solves_ = 0;
  bool gave_up_ = false;
  std::string note_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::optional<Iterate> DualSolver::evaluate(const Eigen::VectorXd& u, int block) {
  LanczosOptions lo = options_.lanczos;
  lo.which = Extreme::kMin;
  lo.seed = options_.lanczos.seed + static_cast<std::uint64_t>(solves_);
  lo.start = warm_;
  ++solves_;
  const EigenBlock eb = extreme_eigenpairs(a_.with_diagonal(u), block, lo);
  // Near the optimum the bottom of the spectrum clusters and the block may
  // miss its tolerance; the first pair still gives a usable estimate, and its
  // residual is charged to the bound. Certification is done separately.
  if (eb.values.size() == 0 || !std::isfinite(eb.values[0]) || !std::isfinite(eb.residuals[0])) {
    log("solve %d: eigensolver failed", solves_);
    return std::nullopt;
  }
  Iterate it;
  it.u = u;
  it.values = eb.values;
  it.vectors = eb.vectors;
  it.residual = eb.residuals[0];
  it.bound = spectral_bound(h_.num_vertices(), h_.num_edges(), eb.values[0] - eb.residuals[0], u.sum());
  warm_ = eb.vectors.col(0);
  log("solve %d: bound %.4f lambda %.8f residual %.2e%s", solves_, it.bound, eb.values[0], eb.residuals[0],
      eb.converged ? "" : " (block not converged)");
  return it;
}

void DualSolver::consider(Iterate it) {
  if (it.bound < best_.bound) best_ = std::move(it);
}

void DualSolver::primal_phase(int iterates, VectorAssignment* primal) {
  const Vertex n = h_.num_vertices();
  AscentOptions init;
  init.rank = options_.rank > 0 ? options_.rank : default_rank(n);
  init.max_sweeps = 0;
  init.seed = options_.seed;
  VectorAssignment va = lowrank_ascent(h_, init);
  RefineOptions ro;
  ro.max_iterations = options_.refine_iterations;
  ro.gradient_tolerance = 1e-9 * std::sqrt(static_cast<double>(n));

  for (int stage = 0; stage < iterates && !stop(); ++stage) {
    va = lowrank_refine(h_, std::move(va), ro);
    log("stage %d: rank %d primal %.4f", stage, va.rank, va.objective);
    if (options_.give_up_at && va.objective >= *options_.give_up_at) {
      gave_up_ = true;
      note_ = "primal relaxation value reached the give-up threshold";
      break;
    }
    const Eigen::VectorXd z = sphere_multipliers(h_, va.vectors);
    const Eigen::VectorXd u = Eigen::VectorXd::Constant(n, z.mean()) - z;
    std::optional<Iterate> it = evaluate(u, options_.block);
    if (!it) continue;

    // Directions of negative curvature of the primal problem are the
    // eigenvectors of A - Diag(z) below zero.
    const double shift = z.mean();
    std::vector<int> negative;
    for (Eigen::Index i = 0; i < it->values.size(); ++i) {
      if (it->values[i] - shift < -1e-6) negative.push_back(static_cast<int>(i));
    }
    Eigen::MatrixXd directions(n, static_cast<Eigen::Index>(negative.size()));
    for (std::size_t k = 0; k < negative.size(); ++k) directions.col(static_cast<Eigen::Index>(k)) = it->vectors.col(negative[k]);
    consider(std::move(*it));
    if (negative.empty()) break;

    // Grow the rank only while the current factor is full rank; otherwise
    // the primal has not converged and more refinement is the better use.
    const Eigen::MatrixXd gram = va.vectors.transpose() * va.vectors;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ge(gram, Eigen::EigenvaluesOnly);
    const bool full_rank = ge.eigenvalues()[0] > 1e-3 * ge.eigenvalues()[gram.rows() - 1];
    const int room = options_.max_rank - va.rank;
    if (!full_rank || room <= 0) continue;
    const int add = std::min(room, static_cast<int>(negative.size()));
    RowMatrix grown(n, va.rank + add);
    grown.leftCols(va.rank) = va.vectors;
    const double scale = 0.3 * std::sqrt(static_cast<double>(n));
    for (int k = 0; k < add; ++k) grown.col(va.rank + k) = scale * directions.col(k);
    grown.rowwise().normalize();
    va.vectors = std::move(grown);
    va.rank += add;
  }
  if (primal) *primal = std::move(va);
}

void DualSolver::subgradient_phase(int iterates) {
  // lambda_min is concave in u with supergradient w o w for a unit minimizing
  // eigenvector w; B therefore has subgradient -(n/4) (w o w - 1/n) on the
  // zero-sum hyperplane. Polyak steps toward a target just below the best
  // bound, falling back to c / sqrt(k) after repeated failures.
  if (!std::isfinite(best_.bound)) return;
  const double n = static_cast<double>(h_.num_vertices());
  Iterate cur = best_;
  double fallback = 0.0;
  int failures = 0;
  for (int k = 1; k <= iterates && !stop(); ++k) {
    const Eigen::VectorXd w = cur.vectors.col(0);
    Eigen::VectorXd g = -0.25 * n * (w.cwiseProduct(w).array() - 1.0 / n).matrix();
    const double gnorm2 = g.squaredNorm();
    if (!(gnorm2 > 1e-28)) break;
    double step;
    if (failures < 3) {
      const double target = best_.bound - std::max(1e-6 * std::abs(best_.bound), 1e-3);
      step = (cur.bound - target) / gnorm2;
      if (fallback == 0.0) fallback = step * std::sqrt(gnorm2);
    } else {
      step = fallback / (std::sqrt(gnorm2) * std::sqrt(static_cast<double>(k)));
    }
    Eigen::VectorXd u = cur.u - step * g;
    u.array() -= u.mean();
    std::optional<Iterate> it = evaluate(u, std::max(1, options_.block / 2));
    if (!it) {
      ++failures;
      continue;
    }
    if (it->bound < best_.bound) {
      failures = 0;
    } else {
      ++failures;
    }
    cur = *it;
    consider(std::move(*it));
  }
}

BoundReport DualSolver::certify() {
  BoundReport report;
  report.method = BoundMethod::kDual;
  report.iterations = solves_;
  report.note = note_;
  const std::int64_t n = h_.num_vertices();

  std::vector<const Iterate*> candidates;
  if (std::isfinite(best_.bound)) candidates.push_back(&best_);
  if (std::isfinite(zero_.bound) && best_.u.cwiseAbs().maxCoeff() > 0) candidates.push_back(&zero_);
  for (const Iterate* c : candidates) {
    const SparseSymMatrix m = a_.with_diagonal(c->u);
    FloorOptions fo = options_.floor;
    fo.lanczos.start = c->vectors.col(0);
    const FloorSearch fs = certify_below(m, c->values[0], c->residual, fo);
    if (!fs.certified) continue;
    report.u = c->u;
    report.sigma = fs.sigma;
    report.certified = true;
    report.tier = fs.certificate.tier;
    report.margin = c->values[0] - fs.sigma;
    report.upper = spectral_bound(n, h_.num_edges(), fs.sigma, c->u.sum());
    return report;
  }
  report.u = Eigen::VectorXd::Zero(n);
  if (report.note.empty()) report.note = "no dual iterate could be certified";
  return report;
}

BoundReport DualSolver::run(VectorAssignment* primal) {
  const Vertex n = h_.num_vertices();
  if (n == 0) {
    BoundReport report;
    report.method = BoundMethod::kDual;
    report.upper = 0.0;
    report.certified = true;
    return report;
  }
  if (auto it = evaluate(Eigen::VectorXd::Zero(n), 1)) {
    zero_ = *it;
    consider(std::move(*it));
  }
  const int budget = std::max(0, options_.budget);
  const int sub = static_cast<int>(std::floor(options_.subgradient_share * budget));
  if (budget > 0 && !stop() && h_.num_edges() > 0) {
    primal_phase(budget - sub, primal);
    subgradient_phase(budget - (solves_ - 1));
  }
  return certify();
}

}  // namespace

BoundReport dual_upper_bound(const Graph& h, const DualOptions& options, VectorAssignment* primal) {
  DualSolver solver(h, options);
  return solver.run(primal);
}

BoundReport dual_upper_bound(const TriangleGraph& tg, const DualOptions& options,
                             VectorAssignment* primal) {
  return dual_upper_bound(tg.h, options, primal);
}

}  // namespace folkman

namespace folkman {

BoundReport lowrank_lower_bound(const Graph& h, const CutSearchOptions& options) {
  BoundReport report;
  report.method = BoundMethod::kLowRank;
  Cut best;
  best.size = -1;
  auto take = [&](Cut c) {
    if (c.size > best.size) best = std::move(c);
  };
  auto reached = [&] { return options.target && best.size >= *options.target; };
  if (options.warm && options.warm->vectors.rows() == h.num_vertices() && h.num_vertices() > 0) {
    take(local_search_improve(h, hyperplane_round(*options.warm, h, options.trials, options.seed)));
  }
  auto one = [&](int k) {
    AscentOptions ao;
    ao.rank = options.rank;
    ao.max_sweeps = options.sweeps;
    ao.seed = options.seed + static_cast<std::uint64_t>(k);
    const VectorAssignment va = lowrank_ascent(h, ao);
    return local_search_improve(h, hyperplane_round(va, h, options.trials, ao.seed));
  };
  const int threads = std::max(1, options.threads);
  for (int k = 0; k < options.restarts && !reached(); k += threads) {
    const int count = std::min(threads, options.restarts - k);
    std::vector<Cut> batch(static_cast<std::size_t>(count));
    if (count == 1) {
      batch[0] = one(k);
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < count; ++i) pool.emplace_back([&, i] { batch[static_cast<std::size_t>(i)] = one(k + i); });
      for (auto& t : pool) t.join();
    }
    // Within a batch, stop at the first restart that reaches the target so
    // the outcome matches a sequential run.
    for (Cut& c : batch) {
      take(std::move(c));
      if (reached()) break;
    }
  }
  report.iterations = options.restarts;
  if (best.size >= 0) {
    report.lower = best.size;
    report.cut = std::move(best);
  }
  return report;
}

}  // namespace folkman

#include "folkman/sparse_sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace folkman {

SparseSymMatrix SparseSymMatrix::adjacency(const Graph& g) {
  auto p = std::make_shared<Pattern>();
  const Vertex n = g.num_vertices();
  p->offsets.resize(static_cast<std::size_t>(n) + 1, 0);
  p->columns.reserve(static_cast<std::size_t>(2 * g.num_edges()));
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    p->columns.insert(p->columns.end(), nb.begin(), nb.end());
    p->offsets[v + 1] = static_cast<std::int64_t>(p->columns.size());
  }
  p->values.assign(p->columns.size(), 1.0);
  SparseSymMatrix m;
  m.dim_ = n;
  m.pattern_ = std::move(p);
  m.diag_ = Eigen::VectorXd::Zero(n);
  return m;
}

SparseSymMatrix SparseSymMatrix::from_upper_entries(std::int32_t dim, std::vector<Entry> entries) {
  SparseSymMatrix m;
  m.dim_ = dim;
  m.diag_ = Eigen::VectorXd::Zero(dim);
  std::vector<Entry> full;
  full.reserve(entries.size() * 2);
  for (const Entry& e : entries) {
    if (e.row < 0 || e.col < 0 || e.row >= dim || e.col >= dim || e.row > e.col) {
      throw std::invalid_argument("upper-triangle entry out of range");
    }
    if (e.row == e.col) {
      m.diag_[e.row] += e.value;
    } else {
      full.push_back(e);
      full.push_back({e.col, e.row, e.value});
    }
  }
  std::sort(full.begin(), full.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  auto p = std::make_shared<Pattern>();
  p->offsets.assign(static_cast<std::size_t>(dim) + 1, 0);
  for (std::size_t k = 0; k < full.size(); ++k) {
    if (!p->columns.empty() && k > 0 && full[k].row == full[k - 1].row &&
        full[k].col == full[k - 1].col) {
      p->values.back() += full[k].value;
      continue;
    }
    p->columns.push_back(full[k].col);
    p->values.push_back(full[k].value);
    p->offsets[full[k].row + 1] = static_cast<std::int64_t>(p->columns.size());
  }
  for (std::int32_t i = 0; i < dim; ++i) {
    p->offsets[i + 1] = std::max(p->offsets[i + 1], p->offsets[i]);
  }
  m.pattern_ = std::move(p);
  return m;
}

std::int64_t SparseSymMatrix::nonzeros_off_diagonal() const {
  return pattern_ ? static_cast<std::int64_t>(pattern_->columns.size()) : 0;
}

SparseSymMatrix SparseSymMatrix::with_diagonal(Eigen::VectorXd diag) const {
  if (diag.size() != dim_) throw std::invalid_argument("diagonal has the wrong length");
  SparseSymMatrix m = *this;
  m.diag_ = std::move(diag);
  return m;
}

SparseSymMatrix SparseSymMatrix::shifted(double shift) const {
  SparseSymMatrix m = *this;
  m.diag_.array() += shift;
  return m;
}

void SparseSymMatrix::multiply(const Eigen::Ref<const Eigen::VectorXd>& x,
                               Eigen::Ref<Eigen::VectorXd> y) const {
  const auto& p = *pattern_;
  const double* xs = x.data();
  for (std::int32_t i = 0; i < dim_; ++i) {
    double acc = diag_[i] * xs[i];
    for (std::int64_t k = p.offsets[i]; k < p.offsets[i + 1]; ++k) {
      acc += p.values[k] * xs[p.columns[k]];
    }
    y[i] = acc;
  }
}

Eigen::VectorXd SparseSymMatrix::operator*(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y(dim_);
  multiply(x, y);
  return y;
}

double SparseSymMatrix::one_norm() const {
  double best = 0.0;
  for (std::int32_t i = 0; i < dim_; ++i) {
    double s = std::abs(diag_[i]);
    for (double v : row_values(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

std::span<const std::int32_t> SparseSymMatrix::row_columns(std::int32_t i) const {
  const auto& p = *pattern_;
  return {p.columns.data() + p.offsets[i], p.columns.data() + p.offsets[i + 1]};
}

std::span<const double> SparseSymMatrix::row_values(std::int32_t i) const {
  const auto& p = *pattern_;
  return {p.values.data() + p.offsets[i], p.values.data() + p.offsets[i + 1]};
}

Eigen::MatrixXd SparseSymMatrix::to_dense() const {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(dim_, dim_);
  for (std::int32_t i = 0; i < dim_; ++i) {
    d(i, i) = diag_[i];
    auto cols = row_columns(i);
    auto vals = row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) d(i, cols[k]) += vals[k];
  }
  return d;
}

Eigen::VectorXd matvec(const SparseSymMatrix& m, const Eigen::VectorXd& x) {
  if (x.size() != m.dim()) {
    throw std::invalid_argument("matvec: vector length " + std::to_string(x.size()) +
                                " does not match dimension " + std::to_string(m.dim()));
  }
  return m * x;
}

}  // namespace folkman

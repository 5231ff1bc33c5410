#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "folkman/graph.hpp"

namespace folkman {

/// Symmetric sparse matrix A + Diag(d).
///
/// The off-diagonal pattern is immutable and shared between copies, so
/// swapping the diagonal (as the dual descent does every iterate) does not
/// copy the pattern. Both triangles are stored row by row; each row's column
/// indices are ascending, which fixes the summation order of matvec.
class SparseSymMatrix {
 public:
  struct Entry {
    std::int32_t row;
    std::int32_t col;
    double value;
  };

  SparseSymMatrix() = default;

  /// Adjacency matrix of g, zero diagonal.
  static SparseSymMatrix adjacency(const Graph& g);

  /// From upper-triangle entries (row <= col). Diagonal entries go to the
  /// diagonal; repeated positions are summed.
  static SparseSymMatrix from_upper_entries(std::int32_t dim, std::vector<Entry> entries);

  std::int32_t dim() const { return dim_; }
  std::int64_t nonzeros_off_diagonal() const;

  const Eigen::VectorXd& diagonal() const { return diag_; }
  /// Same off-diagonal pattern with the diagonal replaced.
  SparseSymMatrix with_diagonal(Eigen::VectorXd diag) const;
  /// Same matrix with shift added to every diagonal entry.
  SparseSymMatrix shifted(double shift) const;

  /// y = (A + Diag(d)) x.
  void multiply(const Eigen::Ref<const Eigen::VectorXd>& x, Eigen::Ref<Eigen::VectorXd> y) const;
  Eigen::VectorXd operator*(const Eigen::VectorXd& x) const;

  /// Max absolute row sum.
  double one_norm() const;

  std::span<const std::int32_t> row_columns(std::int32_t i) const;
  std::span<const double> row_values(std::int32_t i) const;

  Eigen::MatrixXd to_dense() const;

 private:
  struct Pattern {
    std::vector<std::int64_t> offsets;
    std::vector<std::int32_t> columns;
    std::vector<double> values;
  };

  std::int32_t dim_ = 0;
  std::shared_ptr<const Pattern> pattern_;
  Eigen::VectorXd diag_;
};

/// Matrix-vector product for a dimension-checked caller; throws
/// std::invalid_argument on a size mismatch.
Eigen::VectorXd matvec(const SparseSymMatrix& m, const Eigen::VectorXd& x);

}  // namespace folkman

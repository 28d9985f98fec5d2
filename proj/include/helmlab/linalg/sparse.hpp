#pragma once

#include <vector>

#include "helmlab/linalg/types.hpp"

namespace helmlab::linalg {

/// Compressed-row complex sparse matrix. Column indices are strictly
/// increasing within each row; duplicates are forbidden.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(Index nrows, Index ncols, std::vector<Index> row_offsets,
               std::vector<Index> col_indices, Vector values);

  static SparseMatrix identity(Index n);

  Index rows() const { return nrows_; }
  Index cols() const { return ncols_; }
  Index nnz() const { return values_.size(); }

  const std::vector<Index>& row_offsets() const { return row_offsets_; }
  const std::vector<Index>& col_indices() const { return col_indices_; }
  const Vector& values() const { return values_; }
  Vector& values() { return values_; }

  /// Entry lookup by binary search; zero when absent.
  Complex coeff(Index i, Index j) const;

  /// Largest row sum of absolute values (infinity norm).
  double norm_inf() const;

private:
  Index nrows_ = 0;
  Index ncols_ = 0;
  std::vector<Index> row_offsets_;  // size nrows_+1
  std::vector<Index> col_indices_;
  Vector values_;
};

/// Accumulates triplets; duplicate entries are summed at build time.
class SparseBuilder {
public:
  SparseBuilder(Index nrows, Index ncols);

  void add(Index i, Index j, Complex v);
  SparseMatrix build() const;

  Index rows() const { return nrows_; }
  Index cols() const { return ncols_; }

private:
  Index nrows_;
  Index ncols_;
  std::vector<std::vector<std::pair<Index, Complex>>> rows_;
};

/// y = A x with fixed left-to-right summation order per row.
Vector sparse_matvec(const SparseMatrix& A, const Vector& x);

/// C = alpha * A + beta * B (patterns merged).
SparseMatrix sparse_add(Complex alpha, const SparseMatrix& A, Complex beta,
                        const SparseMatrix& B);

}  // namespace helmlab::linalg

#pragma once

#include <vector>

#include "helmlab/linalg/types.hpp"

namespace helmlab::linalg {

/// Column-major complex dense matrix.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(Index nrows, Index ncols)
      : nrows_(nrows), ncols_(ncols), data_(nrows * ncols, Complex(0.0)) {}

  static DenseMatrix identity(Index n);

  Index rows() const { return nrows_; }
  Index cols() const { return ncols_; }

  Complex& operator()(Index i, Index j) { return data_[j * nrows_ + i]; }
  const Complex& operator()(Index i, Index j) const {
    return data_[j * nrows_ + i];
  }

  Complex* col_ptr(Index j) { return data_.data() + j * nrows_; }
  const Complex* col_ptr(Index j) const { return data_.data() + j * nrows_; }

  const Vector& data() const { return data_; }
  Vector& data() { return data_; }

  Vector column(Index j) const;
  void set_column(Index j, const Vector& v);

  DenseMatrix transpose_conjugate() const;

  /// Frobenius norm.
  double norm_frobenius() const;

private:
  Index nrows_ = 0;
  Index ncols_ = 0;
  Vector data_;
};

Vector dense_matvec(const DenseMatrix& A, const Vector& x);

/// y = A^H x
Vector dense_matvec_adjoint(const DenseMatrix& A, const Vector& x);

DenseMatrix dense_matmul(const DenseMatrix& A, const DenseMatrix& B);

}  // namespace helmlab::linalg

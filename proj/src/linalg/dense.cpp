#include "helmlab/linalg/dense.hpp"

#include <cmath>

#include "helmlab/errors.hpp"

namespace helmlab::linalg {

DenseMatrix DenseMatrix::identity(Index n) {
  DenseMatrix I(n, n);
  for (Index i = 0; i < n; ++i) I(i, i) = 1.0;
  return I;
}

Vector DenseMatrix::column(Index j) const {
  return Vector(col_ptr(j), col_ptr(j) + nrows_);
}

void DenseMatrix::set_column(Index j, const Vector& v) {
  if (v.size() != nrows_) throw DimensionError("set_column: size mismatch");
  std::copy(v.begin(), v.end(), col_ptr(j));
}

DenseMatrix DenseMatrix::transpose_conjugate() const {
  DenseMatrix T(ncols_, nrows_);
  for (Index j = 0; j < ncols_; ++j)
    for (Index i = 0; i < nrows_; ++i) T(j, i) = std::conj((*this)(i, j));
  return T;
}

double DenseMatrix::norm_frobenius() const {
  double s = 0.0;
  for (const Complex& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

Vector dense_matvec(const DenseMatrix& A, const Vector& x) {
  if (A.cols() != x.size()) throw DimensionError("dense_matvec: size mismatch");
  Vector y(A.rows(), 0.0);
  for (Index j = 0; j < A.cols(); ++j) {
    const Complex xj = x[j];
    const Complex* c = A.col_ptr(j);
    for (Index i = 0; i < A.rows(); ++i) y[i] += c[i] * xj;
  }
  return y;
}

Vector dense_matvec_adjoint(const DenseMatrix& A, const Vector& x) {
  if (A.rows() != x.size())
    throw DimensionError("dense_matvec_adjoint: size mismatch");
  Vector y(A.cols(), 0.0);
  for (Index j = 0; j < A.cols(); ++j) {
    const Complex* c = A.col_ptr(j);
    Complex s = 0.0;
    for (Index i = 0; i < A.rows(); ++i) s += std::conj(c[i]) * x[i];
    y[j] = s;
  }
  return y;
}

DenseMatrix dense_matmul(const DenseMatrix& A, const DenseMatrix& B) {
  if (A.cols() != B.rows()) throw DimensionError("dense_matmul: size mismatch");
  DenseMatrix C(A.rows(), B.cols());
  for (Index j = 0; j < B.cols(); ++j) {
    for (Index k = 0; k < A.cols(); ++k) {
      const Complex bkj = B(k, j);
      if (bkj == Complex(0.0)) continue;
      const Complex* a = A.col_ptr(k);
      Complex* c = C.col_ptr(j);
      for (Index i = 0; i < A.rows(); ++i) c[i] += a[i] * bkj;
    }
  }
  return C;
}

}  // namespace helmlab::linalg

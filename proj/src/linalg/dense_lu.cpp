#include "helmlab/linalg/dense_lu.hpp"

#include <cmath>

#include "helmlab/errors.hpp"

namespace helmlab::linalg {

DenseLU::DenseLU(DenseMatrix A) : lu_(std::move(A)) {
  if (lu_.rows() != lu_.cols()) throw DimensionError("DenseLU: matrix not square");
  const Index n = lu_.rows();
  piv_.resize(n);
  for (Index k = 0; k < n; ++k) {
    Index ip = k;
    double pmax = std::abs(lu_(k, k));
    for (Index i = k + 1; i < n; ++i) {
      double a = std::abs(lu_(i, k));
      if (a > pmax) {
        pmax = a;
        ip = i;
      }
    }
    if (pmax < 1e-300) throw SingularMatrixError("DenseLU: zero pivot");
    piv_[k] = ip;
    if (ip != k)
      for (Index j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(ip, j));
    const Complex pivot = lu_(k, k);
    for (Index i = k + 1; i < n; ++i) {
      const Complex m = lu_(i, k) / pivot;
      lu_(i, k) = m;
      if (m == Complex(0.0)) continue;
      for (Index j = k + 1; j < n; ++j) lu_(i, j) -= m * lu_(k, j);
    }
  }
}

Vector DenseLU::solve(const Vector& b) const {
  const Index n = size();
  if (b.size() != n) throw DimensionError("DenseLU::solve: size mismatch");
  Vector x = b;
  for (Index k = 0; k < n; ++k)
    if (piv_[k] != k) std::swap(x[k], x[piv_[k]]);
  for (Index k = 0; k < n; ++k) {
    const Complex xk = x[k];
    if (xk == Complex(0.0)) continue;
    for (Index i = k + 1; i < n; ++i) x[i] -= lu_(i, k) * xk;
  }
  for (Index kk = n; kk-- > 0;) {
    Complex s = x[kk];
    for (Index j = kk + 1; j < n; ++j) s -= lu_(kk, j) * x[j];
    x[kk] = s / lu_(kk, kk);
  }
  return x;
}

Vector DenseLU::solve_adjoint(const Vector& b) const {
  // (PA)^H = U^H L^H P, so solve U^H y = b, L^H z = y, x = P^T z.
  const Index n = size();
  if (b.size() != n) throw DimensionError("DenseLU::solve_adjoint: size mismatch");
  Vector x = b;
  for (Index k = 0; k < n; ++k) {
    Complex s = x[k];
    for (Index j = 0; j < k; ++j) s -= std::conj(lu_(j, k)) * x[j];
    x[k] = s / std::conj(lu_(k, k));
  }
  for (Index kk = n; kk-- > 0;) {
    Complex s = x[kk];
    for (Index i = kk + 1; i < n; ++i) s -= std::conj(lu_(i, kk)) * x[i];
    x[kk] = s;
  }
  for (Index kk = n; kk-- > 0;)
    if (piv_[kk] != kk) std::swap(x[kk], x[piv_[kk]]);
  return x;
}

DenseMatrix DenseLU::inverse() const {
  const Index n = size();
  DenseMatrix inv(n, n);
  Vector e(n, 0.0);
  for (Index j = 0; j < n; ++j) {
    e.assign(n, 0.0);
    e[j] = 1.0;
    inv.set_column(j, solve(e));
  }
  return inv;
}

double DenseLU::abs_det() const {
  double d = 1.0;
  for (Index i = 0; i < size(); ++i) d *= std::abs(lu_(i, i));
  return d;
}

}  // namespace helmlab::linalg

#include "helmlab/linalg/least_squares.hpp"

#include <cmath>

#include "helmlab/errors.hpp"

namespace helmlab::linalg {

namespace {

// Householder vector for x: returns (v, beta) with (I - beta v v^H) x =
// -phase(x_0) ||x|| e_0 and v_0 = 1.
std::pair<Vector, double> householder(const Vector& x) {
  const Index m = x.size();
  Vector v = x;
  double xnorm = norm2(x);
  if (xnorm == 0.0) return {Vector(m, 0.0), 0.0};
  Complex phase = x[0] != Complex(0.0) ? x[0] / std::abs(x[0]) : Complex(1.0);
  Complex alpha = phase * xnorm;
  v[0] += alpha;
  double vnorm2 = 0.0;
  for (const Complex& c : v) vnorm2 += std::norm(c);
  if (vnorm2 == 0.0) return {Vector(m, 0.0), 0.0};
  // Normalize so v_0 = 1 to make beta real.
  Complex v0 = v[0];
  double beta = 2.0 * std::norm(v0) / vnorm2;
  for (Complex& c : v) c /= v0;
  return {std::move(v), beta};
}

}  // namespace

Vector least_squares_solve(const DenseMatrix& M, const Vector& b) {
  const Index m = M.rows(), n = M.cols();
  if (m < n) throw DimensionError("least_squares_solve: nrows < ncols");
  if (b.size() != m) throw DimensionError("least_squares_solve: rhs size mismatch");

  DenseMatrix R = M;
  Vector rhs = b;
  const double mnorm = M.norm_frobenius();

  for (Index k = 0; k < n; ++k) {
    Vector x(m - k);
    for (Index i = k; i < m; ++i) x[i - k] = R(i, k);
    auto [v, beta] = householder(x);
    if (beta != 0.0) {
      for (Index j = k; j < n; ++j) {
        Complex s = 0.0;
        for (Index i = k; i < m; ++i) s += std::conj(v[i - k]) * R(i, j);
        s *= beta;
        for (Index i = k; i < m; ++i) R(i, j) -= s * v[i - k];
      }
      Complex s = 0.0;
      for (Index i = k; i < m; ++i) s += std::conj(v[i - k]) * rhs[i];
      s *= beta;
      for (Index i = k; i < m; ++i) rhs[i] -= s * v[i - k];
    }
    if (std::abs(R(k, k)) < 1e-14 * mnorm)
      throw RankDeficientError("least_squares_solve: rank-deficient matrix");
  }

  Vector x(n);
  for (Index kk = n; kk-- > 0;) {
    Complex s = rhs[kk];
    for (Index j = kk + 1; j < n; ++j) s -= R(kk, j) * x[j];
    x[kk] = s / R(kk, kk);
  }
  return x;
}

}  // namespace helmlab::linalg

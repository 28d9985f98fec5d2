#include "helmlab/linalg/eig.hpp"

#include <cmath>
#include <limits>

#include "helmlab/errors.hpp"
#include "helmlab/linalg/dense_lu.hpp"

namespace helmlab::linalg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Givens {
  double c;   // real by construction
  Complex s;  // [c, s; -conj(s), c] applied from the left zeroes the second entry
};

Givens make_givens(Complex a, Complex b) {
  if (b == Complex(0.0)) return {1.0, 0.0};
  double aa = std::abs(a), ab = std::abs(b);
  double r = std::hypot(aa, ab);
  if (aa == 0.0) return {0.0, std::conj(b) / ab};
  Complex phase = a / aa;
  return {aa / r, phase * std::conj(b) / r};
}

// Rows i and i+1 of H over columns [jlo, jhi).
void apply_left(DenseMatrix& H, Index i, const Givens& g, Index jlo, Index jhi) {
  for (Index j = jlo; j < jhi; ++j) {
    Complex t1 = H(i, j), t2 = H(i + 1, j);
    H(i, j) = g.c * t1 + g.s * t2;
    H(i + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
  }
}

// Columns i and i+1 of H over rows [ilo, ihi): multiply by the adjoint
// rotation on the right (similarity completion).
void apply_right(DenseMatrix& H, Index i, const Givens& g, Index ilo, Index ihi) {
  for (Index r = ilo; r < ihi; ++r) {
    Complex t1 = H(r, i), t2 = H(r, i + 1);
    H(r, i) = g.c * t1 + std::conj(g.s) * t2;
    H(r, i + 1) = -g.s * t1 + g.c * t2;
  }
}

// Eigenvalue of [[a, b], [c, d]] closest to d (Wilkinson shift).
Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  Complex tr2 = (a - d) * 0.5;
  Complex disc = std::sqrt(tr2 * tr2 + b * c);
  Complex e1 = d + tr2 + disc;
  Complex e2 = d + tr2 - disc;
  return std::abs(e1 - d) < std::abs(e2 - d) ? e1 : e2;
}

bool is_upper_hessenberg(const DenseMatrix& H) {
  for (Index j = 0; j + 2 < H.rows(); ++j)
    for (Index i = j + 2; i < H.rows(); ++i)
      if (H(i, j) != Complex(0.0)) return false;
  return true;
}

// Single-shift QR on an upper-Hessenberg matrix. When schur != nullptr the
// rotations accumulate into it and the full matrix is kept (Schur form);
// otherwise only the active window is updated.
void hessenberg_qr(DenseMatrix& H, DenseMatrix* schur) {
  const Index n = H.rows();
  if (n == 0) return;
  const Index max_sweeps = 30 * n;
  Index sweeps = 0;
  Index hi = n - 1;
  Index stagnation = 0;

  while (true) {
    // Deflate converged subdiagonals.
    while (hi > 0) {
      double h = std::abs(H(hi, hi - 1));
      if (h <= kEps * (std::abs(H(hi - 1, hi - 1)) + std::abs(H(hi, hi)))) {
        H(hi, hi - 1) = 0.0;
        --hi;
        stagnation = 0;
      } else {
        break;
      }
    }
    if (hi == 0) break;

    // Active block [lo, hi].
    Index lo = hi;
    while (lo > 0) {
      double h = std::abs(H(lo, lo - 1));
      if (h <= kEps * (std::abs(H(lo - 1, lo - 1)) + std::abs(H(lo, lo)))) {
        H(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }

    if (++sweeps > max_sweeps)
      throw ConvergenceFailure("hessenberg_eigenvalues: QR did not converge");

    Complex mu;
    if (++stagnation % 10 == 0) {
      // Exceptional shift to break symmetry-induced cycling.
      mu = H(hi, hi) + 0.75 * std::abs(H(hi, hi - 1));
    } else {
      mu = wilkinson_shift(H(hi - 1, hi - 1), H(hi - 1, hi), H(hi, hi - 1),
                           H(hi, hi));
    }

    const Index row_end = schur ? n : hi + 1;
    const Index col_lo = schur ? 0 : lo;

    // Implicit single shift: create the bulge, then chase it down.
    Givens g = make_givens(H(lo, lo) - mu, H(lo + 1, lo));
    apply_left(H, lo, g, col_lo, row_end);
    apply_right(H, lo, g, 0, std::min(lo + 3, hi + 1));
    if (schur) apply_right(*schur, lo, g, 0, n);
    for (Index i = lo + 1; i < hi; ++i) {
      g = make_givens(H(i, i - 1), H(i + 1, i - 1));
      apply_left(H, i, g, i - 1, row_end);
      H(i + 1, i - 1) = 0.0;
      apply_right(H, i, g, 0, std::min(i + 3, hi + 1));
      if (schur) apply_right(*schur, i, g, 0, n);
    }
  }
}

}  // namespace

Vector hessenberg_eigenvalues(const DenseMatrix& H_in) {
  if (H_in.rows() != H_in.cols())
    throw DimensionError("hessenberg_eigenvalues: matrix not square");
  if (!is_upper_hessenberg(H_in))
    throw DimensionError("hessenberg_eigenvalues: matrix not upper Hessenberg");
  DenseMatrix H = H_in;
  hessenberg_qr(H, nullptr);
  Vector ev(H.rows());
  for (Index i = 0; i < H.rows(); ++i) ev[i] = H(i, i);
  return ev;
}

namespace {

// Householder reduction to upper-Hessenberg form, accumulating Q.
void hessenberg_reduce(DenseMatrix& A, DenseMatrix& Q) {
  const Index n = A.rows();
  Q = DenseMatrix::identity(n);
  for (Index k = 0; k + 2 < n; ++k) {
    // Householder vector for A(k+1:n, k).
    Index m = n - k - 1;
    Vector v(m);
    double xnorm = 0.0;
    for (Index i = 0; i < m; ++i) {
      v[i] = A(k + 1 + i, k);
      xnorm += std::norm(v[i]);
    }
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    Complex phase = v[0] != Complex(0.0) ? v[0] / std::abs(v[0]) : Complex(1.0);
    v[0] += phase * xnorm;
    double vnorm2 = 0.0;
    for (const Complex& c : v) vnorm2 += std::norm(c);
    if (vnorm2 == 0.0) continue;
    double beta = 2.0 / vnorm2;

    // A <- P A with P = I - beta v v^H acting on rows k+1..n.
    for (Index j = k; j < n; ++j) {
      Complex s = 0.0;
      for (Index i = 0; i < m; ++i) s += std::conj(v[i]) * A(k + 1 + i, j);
      s *= beta;
      for (Index i = 0; i < m; ++i) A(k + 1 + i, j) -= s * v[i];
    }
    // A <- A P on columns k+1..n.
    for (Index r = 0; r < n; ++r) {
      Complex s = 0.0;
      for (Index i = 0; i < m; ++i) s += A(r, k + 1 + i) * v[i];
      s *= beta;
      for (Index i = 0; i < m; ++i) A(r, k + 1 + i) -= s * std::conj(v[i]);
    }
    // Q <- Q P.
    for (Index r = 0; r < n; ++r) {
      Complex s = 0.0;
      for (Index i = 0; i < m; ++i) s += Q(r, k + 1 + i) * v[i];
      s *= beta;
      for (Index i = 0; i < m; ++i) Q(r, k + 1 + i) -= s * std::conj(v[i]);
    }
    for (Index i = k + 2; i < n; ++i) A(i, k) = 0.0;
  }
}

}  // namespace

EigenDecomposition dense_eig(const DenseMatrix& A_in) {
  if (A_in.rows() != A_in.cols()) throw DimensionError("dense_eig: matrix not square");
  const Index n = A_in.rows();
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.kappa.assign(n, 1.0);
  if (n == 0) return out;

  DenseMatrix T = A_in;
  DenseMatrix Q;
  hessenberg_reduce(T, Q);
  hessenberg_qr(T, &Q);

  const double tnorm = T.norm_frobenius();
  for (Index i = 0; i < n; ++i) out.eigenvalues[i] = T(i, i);

  // Right eigenvectors of the triangular Schur factor by back-substitution.
  DenseMatrix Y(n, n);
  for (Index i = 0; i < n; ++i) {
    Y(i, i) = 1.0;
    const Complex lam = T(i, i);
    for (Index jj = i; jj-- > 0;) {
      Complex s = 0.0;
      for (Index k2 = jj + 1; k2 <= i; ++k2) s += T(jj, k2) * Y(k2, i);
      Complex den = T(jj, jj) - lam;
      if (std::abs(den) < kEps * tnorm) den = Complex(kEps * tnorm);
      Y(jj, i) = -s / den;
    }
  }
  DenseMatrix V = dense_matmul(Q, Y);
  for (Index j = 0; j < n; ++j) {
    double nv = 0.0;
    Complex* c = V.col_ptr(j);
    for (Index i = 0; i < n; ++i) nv += std::norm(c[i]);
    nv = std::sqrt(nv);
    if (nv > 0.0)
      for (Index i = 0; i < n; ++i) c[i] /= nv;
  }

  // Left vectors: rows of V^{-1}, conjugated, so v_hat_i^H v_j = delta_ij.
  DenseMatrix Vinv;
  try {
    Vinv = DenseLU(V).inverse();
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("dense_eig: right-eigenvector matrix is singular");
  }
  out.right_vectors = std::move(V);
  out.left_vectors = DenseMatrix(n, n);
  for (Index i = 0; i < n; ++i) {
    double row_norm = 0.0;
    for (Index j = 0; j < n; ++j) {
      out.left_vectors(j, i) = std::conj(Vinv(i, j));
      row_norm += std::norm(Vinv(i, j));
    }
    out.kappa[i] = std::sqrt(row_norm);  // ||v_i|| = 1 after normalization
    if (out.kappa[i] < 1.0) out.kappa[i] = 1.0;
  }

  // Condition estimate of the eigenvector basis (1-norms).
  double nv1 = 0.0, ni1 = 0.0;
  for (Index j = 0; j < n; ++j) {
    double s1 = 0.0, s2 = 0.0;
    for (Index i = 0; i < n; ++i) {
      s1 += std::abs(out.right_vectors(i, j));
      s2 += std::abs(Vinv(i, j));
    }
    nv1 = std::max(nv1, s1);
    ni1 = std::max(ni1, s2);
  }
  out.ill_conditioned_basis = nv1 * ni1 > 1e12;
  return out;
}

}  // namespace helmlab::linalg

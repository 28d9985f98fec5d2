#include "doctest.h"

#include <algorithm>

#include "helmlab/errors.hpp"
#include "helmlab/linalg/eig.hpp"
#include "support/test_helpers.hpp"

using namespace helmlab;
using namespace helmlab::linalg;
namespace ht = helmlab::testing;

namespace {

// Multiset comparison up to tolerance via greedy matching.
double multiset_distance(Vector a, Vector b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (const Complex& x : a) {
    double best = 1e300;
    Index arg = npos;
    for (Index j = 0; j < b.size(); ++j) {
      double d = std::abs(x - b[j]);
      if (d < best) {
        best = d;
        arg = j;
      }
    }
    worst = std::max(worst, best);
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(arg));
  }
  return worst;
}

}  // namespace

TEST_CASE("upper triangular eigenvalues are the diagonal") {
  DenseMatrix H(3, 3);
  H(0, 0) = Complex(1, 2);
  H(0, 1) = 5.0;
  H(0, 2) = -1.0;
  H(1, 1) = Complex(-3, 0.5);
  H(1, 2) = 2.0;
  H(2, 2) = Complex(0, -1);
  auto ev = hessenberg_eigenvalues(H);
  Vector want{Complex(1, 2), Complex(-3, 0.5), Complex(0, -1)};
  CHECK(multiset_distance(ev, want) < 1e-12);
}

TEST_CASE("swap matrix eigenvalues are plus minus one") {
  DenseMatrix H(2, 2);
  H(0, 1) = 1.0;
  H(1, 0) = 1.0;
  auto ev = hessenberg_eigenvalues(H);
  Vector want{Complex(1, 0), Complex(-1, 0)};
  CHECK(multiset_distance(ev, want) < 1e-12);
}

TEST_CASE("companion matrix of z^3 - 1 gives cube roots of unity") {
  DenseMatrix C(3, 3);
  C(0, 2) = 1.0;  // companion of z^3 - 1
  C(1, 0) = 1.0;
  C(2, 1) = 1.0;
  auto ev = hessenberg_eigenvalues(C);
  const double s3 = std::sqrt(3.0) / 2.0;
  Vector want{Complex(1, 0), Complex(-0.5, s3), Complex(-0.5, -s3)};
  CHECK(multiset_distance(ev, want) < 1e-10);
}

TEST_CASE("non-hessenberg input rejected") {
  DenseMatrix A(3, 3);
  A(2, 0) = 1.0;
  CHECK_THROWS_AS(hessenberg_eigenvalues(A), DimensionError);
}

TEST_CASE("dense_eig on diag(1,2) is exact") {
  DenseMatrix A(2, 2);
  A(0, 0) = 1.0;
  A(1, 1) = 2.0;
  auto d = dense_eig(A);
  CHECK(multiset_distance(d.eigenvalues, Vector{1.0, 2.0}) < 1e-14);
  for (double k : d.kappa) CHECK(k == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("jordan-like matrix has large eigenvalue condition") {
  DenseMatrix A(2, 2);
  A(0, 0) = 1.0;
  A(0, 1) = 100.0;
  A(1, 1) = 1.001;
  auto d = dense_eig(A);
  // Closed form: eigenvector of 1.001 is (100, 0.001)/norm, nearly parallel
  // to (1, 0), so kappa blows up.
  CHECK(d.kappa[0] >= 100.0);
  CHECK(d.kappa[1] >= 100.0);
}

TEST_CASE("random 20x20 self-consistency") {
  auto gen = ht::rng(101);
  auto A = ht::random_dense(gen, 20, 20);
  auto d = dense_eig(A);
  double anorm = A.norm_frobenius();
  // ||A v_i - lambda_i v_i|| <= 1e-8 ||A||
  for (Index i = 0; i < 20; ++i) {
    auto v = d.right_vectors.column(i);
    auto Av = dense_matvec(A, v);
    for (Index r = 0; r < 20; ++r) Av[r] -= d.eigenvalues[i] * v[r];
    CHECK(norm2(Av) < 1e-8 * anorm);
  }
  // Biorthogonality: left_vectors^H right_vectors = I.
  for (Index i = 0; i < 20; ++i)
    for (Index j = 0; j < 20; ++j) {
      Complex s = dot(d.left_vectors.column(i), d.right_vectors.column(j));
      CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) < 1e-8);
    }
}

TEST_CASE("eigenvalues invariant under permutation similarity") {
  auto gen = ht::rng(55);
  auto A = ht::random_dense(gen, 12, 12);
  std::vector<Index> perm(12);
  for (Index i = 0; i < 12; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), gen);
  DenseMatrix B(12, 12);
  for (Index i = 0; i < 12; ++i)
    for (Index j = 0; j < 12; ++j) B(perm[i], perm[j]) = A(i, j);
  auto ea = dense_eig(A).eigenvalues;
  auto eb = dense_eig(B).eigenvalues;
  CHECK(multiset_distance(ea, eb) < 1e-8);
}

TEST_CASE("kappa is one for normal matrices") {
  auto gen = ht::rng(77);
  // Unitary from QR of a random matrix, applied to a diagonal.
  const Index n = 8;
  auto M = ht::random_dense(gen, n, n);
  // Gram-Schmidt to build a unitary Q.
  DenseMatrix Q(n, n);
  for (Index j = 0; j < n; ++j) {
    auto v = M.column(j);
    for (Index k = 0; k < j; ++k) {
      auto q = Q.column(k);
      Complex proj = dot(q, v);
      for (Index i = 0; i < n; ++i) v[i] -= proj * q[i];
    }
    double nv = norm2(v);
    for (auto& c : v) c /= nv;
    Q.set_column(j, v);
  }
  DenseMatrix D(n, n);
  for (Index i = 0; i < n; ++i) D(i, i) = Complex(double(i) + 1.0, double(i) - 3.0);
  auto A = dense_matmul(dense_matmul(Q, D), Q.transpose_conjugate());
  auto d = dense_eig(A);
  for (double k : d.kappa) CHECK(k == doctest::Approx(1.0).epsilon(1e-10));
}

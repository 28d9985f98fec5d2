#include "doctest.h"

#include "helmlab/errors.hpp"
#include "helmlab/linalg/dense_lu.hpp"
#include "support/test_helpers.hpp"

using namespace helmlab;
using namespace helmlab::linalg;
namespace ht = helmlab::testing;

TEST_CASE("dense matvec and matmul against reference") {
  auto gen = ht::rng(7);
  auto A = ht::random_dense(gen, 6, 4);
  auto x = ht::random_vector(gen, 4);
  CHECK(ht::rel_err(dense_matvec(A, x), ht::dense_reference_matvec(A, x)) < 1e-14);

  auto B = ht::random_dense(gen, 4, 5);
  auto C = dense_matmul(A, B);
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 5; ++j) {
      Complex s = 0.0;
      for (Index k = 0; k < 4; ++k) s += A(i, k) * B(k, j);
      CHECK(std::abs(C(i, j) - s) < 1e-13);
    }
}

TEST_CASE("adjoint matvec") {
  auto gen = ht::rng(9);
  auto A = ht::random_dense(gen, 5, 3);
  auto x = ht::random_vector(gen, 5);
  auto y = dense_matvec_adjoint(A, x);
  auto Ah = A.transpose_conjugate();
  CHECK(ht::rel_err(y, ht::dense_reference_matvec(Ah, x)) < 1e-14);
}

TEST_CASE("dense LU solve and inverse") {
  auto gen = ht::rng(13);
  auto A = ht::random_dense(gen, 12, 12);
  for (Index i = 0; i < 12; ++i) A(i, i) += 4.0;  // keep well conditioned
  auto b = ht::random_vector(gen, 12);
  DenseLU lu(A);
  auto x = lu.solve(b);
  CHECK(ht::rel_err(ht::dense_reference_matvec(A, x), b) < 1e-12);

  auto inv = lu.inverse();
  auto AI = dense_matmul(A, inv);
  for (Index i = 0; i < 12; ++i)
    for (Index j = 0; j < 12; ++j)
      CHECK(std::abs(AI(i, j) - (i == j ? 1.0 : 0.0)) < 1e-11);
}

TEST_CASE("dense LU adjoint solve") {
  auto gen = ht::rng(15);
  auto A = ht::random_dense(gen, 9, 9);
  for (Index i = 0; i < 9; ++i) A(i, i) += 3.0;
  auto b = ht::random_vector(gen, 9);
  auto x = DenseLU(A).solve_adjoint(b);
  auto r = ht::dense_reference_matvec(A.transpose_conjugate(), x);
  CHECK(ht::rel_err(r, b) < 1e-12);
}

TEST_CASE("dense LU rejects singular") {
  DenseMatrix A(2, 2);
  A(0, 0) = 1.0;
  A(0, 1) = 2.0;
  A(1, 0) = 2.0;
  A(1, 1) = 4.0;
  CHECK_THROWS_AS(DenseLU{A}, SingularMatrixError);
}

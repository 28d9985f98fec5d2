#include "doctest.h"

#include "helmlab/errors.hpp"
#include "helmlab/linalg/least_squares.hpp"
#include "support/test_helpers.hpp"

using namespace helmlab;
using namespace helmlab::linalg;
namespace ht = helmlab::testing;

TEST_CASE("square invertible system solved exactly") {
  auto gen = ht::rng(2);
  auto A = ht::random_dense(gen, 5, 5);
  for (Index i = 0; i < 5; ++i) A(i, i) += 3.0;
  auto xs = ht::random_vector(gen, 5);
  auto b = ht::dense_reference_matvec(A, xs);
  auto x = least_squares_solve(A, b);
  CHECK(ht::rel_err(x, xs) < 1e-12);
}

TEST_CASE("overdetermined column of ones gives the mean") {
  DenseMatrix M(2, 1);
  M(0, 0) = 1.0;
  M(1, 0) = 1.0;
  Vector b{Complex(0.0), Complex(2.0)};
  auto x = least_squares_solve(M, b);
  CHECK(std::abs(x[0] - Complex(1.0)) < 1e-14);
}

TEST_CASE("residual orthogonal to the range") {
  auto gen = ht::rng(23);
  auto M = ht::random_dense(gen, 10, 4);
  auto b = ht::random_vector(gen, 10);
  auto x = least_squares_solve(M, b);
  auto r = ht::dense_reference_matvec(M, x);
  for (Index i = 0; i < 10; ++i) r[i] = b[i] - r[i];
  auto g = dense_matvec_adjoint(M, r);  // normal equations: M^H r = 0
  CHECK(norm2(g) < 1e-12 * norm2(b) * M.norm_frobenius());
}

TEST_CASE("rank deficiency raises") {
  DenseMatrix M(4, 2);
  for (Index i = 0; i < 4; ++i) {
    M(i, 0) = Complex(1.0, double(i));
    M(i, 1) = Complex(2.0, 2.0 * double(i));  // second column = 2x first
  }
  Vector b(4, 1.0);
  CHECK_THROWS_AS(least_squares_solve(M, b), RankDeficientError);
}

TEST_CASE("underdetermined shape rejected") {
  DenseMatrix M(2, 3);
  Vector b(2, 1.0);
  CHECK_THROWS_AS(least_squares_solve(M, b), DimensionError);
}

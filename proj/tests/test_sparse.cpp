#include "doctest.h"

#include "helmlab/errors.hpp"
#include "helmlab/linalg/sparse.hpp"
#include "support/test_helpers.hpp"

using namespace helmlab;
using namespace helmlab::linalg;
namespace ht = helmlab::testing;

TEST_CASE("identity matvec") {
  auto I = SparseMatrix::identity(3);
  Vector x{Complex(1, 0), Complex(0, 1), Complex(-2, 0)};
  auto y = sparse_matvec(I, x);
  for (Index i = 0; i < 3; ++i) CHECK(y[i] == x[i]);
}

TEST_CASE("permutation matvec swaps entries") {
  SparseBuilder b(2, 2);
  b.add(0, 1, 1.0);
  b.add(1, 0, 1.0);
  auto A = b.build();
  Vector x{Complex(2, 1), Complex(-3, 4)};
  auto y = sparse_matvec(A, x);
  CHECK(y[0] == x[1]);
  CHECK(y[1] == x[0]);
}

TEST_CASE("matvec agrees with dense oracle on random matrices") {
  auto gen = ht::rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Index n = 5 + static_cast<Index>(trial) * 2;
    auto A = ht::random_sparse_diag_dominant(gen, n, 0.3);
    auto x = ht::random_vector(gen, n);
    auto y = sparse_matvec(A, x);
    auto yref = ht::dense_reference_matvec(ht::to_dense(A), x);
    CHECK(ht::rel_err(y, yref) < 1e-13);
  }
}

TEST_CASE("matvec dimension mismatch raises") {
  auto I = SparseMatrix::identity(3);
  Vector x(2, 1.0);
  CHECK_THROWS_AS(sparse_matvec(I, x), DimensionError);
}

TEST_CASE("builder sums duplicates and sorts columns") {
  SparseBuilder b(2, 3);
  b.add(0, 2, Complex(1, 0));
  b.add(0, 0, Complex(2, 0));
  b.add(0, 2, Complex(0, 3));
  auto A = b.build();
  CHECK(A.nnz() == 2);
  CHECK(A.coeff(0, 0) == Complex(2, 0));
  CHECK(A.coeff(0, 2) == Complex(1, 3));
  CHECK(A.coeff(1, 1) == Complex(0, 0));
}

TEST_CASE("non-finite values rejected") {
  SparseBuilder b(1, 1);
  b.add(0, 0, Complex(std::nan(""), 0.0));
  CHECK_THROWS_AS(b.build(), DimensionError);
}

TEST_CASE("sparse_add merges patterns") {
  SparseBuilder b1(2, 2), b2(2, 2);
  b1.add(0, 0, 1.0);
  b2.add(0, 1, 2.0);
  b2.add(0, 0, 3.0);
  auto C = sparse_add(Complex(2.0), b1.build(), Complex(-1.0), b2.build());
  CHECK(C.coeff(0, 0) == Complex(-1.0));
  CHECK(C.coeff(0, 1) == Complex(-2.0));
}

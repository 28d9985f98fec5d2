#include "doctest.h"

#include "helmlab/errors.hpp"
#include "helmlab/linalg/sparse_lu.hpp"
#include "support/test_helpers.hpp"

using namespace helmlab;
using namespace helmlab::linalg;
namespace ht = helmlab::testing;

namespace {

double solve_residual(const SparseMatrix& A, const Vector& b, const Vector& x) {
  auto r = sparse_matvec(A, x);
  for (Index i = 0; i < r.size(); ++i) r[i] -= b[i];
  return norm2(r) / norm2(b);
}

}  // namespace

TEST_CASE("diagonal factor and solve") {
  SparseBuilder b(2, 2);
  b.add(0, 0, Complex(2, 0));
  b.add(1, 1, Complex(0, 3));
  auto A = b.build();
  SparseLU lu(A);
  Vector rhs{Complex(2, 0), Complex(0, 3)};
  auto x = lu.solve(rhs);
  CHECK(std::abs(x[0] - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(x[1] - Complex(1, 0)) < 1e-15);
}

TEST_CASE("antidiagonal requires pivoting") {
  SparseBuilder b(2, 2);
  b.add(0, 1, 1.0);
  b.add(1, 0, 1.0);
  auto A = b.build();
  SparseLU lu(A);
  Vector rhs{Complex(1, 0), Complex(2, 0)};
  auto x = lu.solve(rhs);
  CHECK(std::abs(x[0] - Complex(2, 0)) < 1e-15);
  CHECK(std::abs(x[1] - Complex(1, 0)) < 1e-15);
}

TEST_CASE("random 50x50 diag-dominant residual") {
  auto gen = ht::rng(3);
  auto A = ht::random_sparse_diag_dominant(gen, 50, 0.1);
  auto b = ht::random_vector(gen, 50);
  SparseLU lu(A);
  auto x = lu.solve(b);
  CHECK(solve_residual(A, b, x) < 1e-12);
}

TEST_CASE("solve recovers planted solution") {
  auto gen = ht::rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Index n = 10 + 7 * static_cast<Index>(trial);
    auto A = ht::random_sparse_diag_dominant(gen, n, 0.15);
    auto xs = ht::random_vector(gen, n);
    auto b = sparse_matvec(A, xs);
    auto x = SparseLU(A).solve(b);
    CHECK(ht::rel_err(x, xs) < 1e-9);
  }
}

TEST_CASE("solutions match full-pivoting dense oracle") {
  auto gen = ht::rng(29);
  auto A = ht::random_sparse_diag_dominant(gen, 25, 0.2);
  auto b = ht::random_vector(gen, 25);
  auto x = SparseLU(A).solve(b);
  auto xref = ht::dense_reference_solve(ht::to_dense(A), b);
  CHECK(ht::rel_err(x, xref) < 1e-11);
}

TEST_CASE("exact singularity detected") {
  SparseBuilder b(3, 3);
  b.add(0, 0, 1.0);
  b.add(0, 1, 1.0);
  b.add(1, 0, 1.0);
  b.add(1, 1, 1.0);  // rows 0 and 1 identical
  b.add(2, 2, 1.0);
  CHECK_THROWS_AS(SparseLU(b.build()), SingularMatrixError);
}

TEST_CASE("structurally empty column detected") {
  SparseBuilder b(2, 2);
  b.add(0, 0, 1.0);
  b.add(1, 0, 1.0);
  CHECK_THROWS_AS(SparseLU(b.build()), SingularMatrixError);
}

TEST_CASE("rcm ordering is a permutation") {
  auto gen = ht::rng(5);
  auto A = ht::random_sparse_diag_dominant(gen, 30, 0.1);
  auto ord = rcm_ordering(A);
  std::vector<char> seen(30, 0);
  for (Index v : ord) {
    CHECK(v < 30);
    CHECK(!seen[v]);
    seen[v] = 1;
  }
  CHECK(ord.size() == 30);
}

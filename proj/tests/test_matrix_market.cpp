#include "doctest.h"

#include <sstream>

#include "helmlab/errors.hpp"
#include "helmlab/linalg/matrix_market.hpp"
#include "support/test_helpers.hpp"

using namespace helmlab;
using namespace helmlab::linalg;
namespace ht = helmlab::testing;

TEST_CASE("sparse round trip preserves values bitwise") {
  auto gen = ht::rng(31);
  auto A = ht::random_sparse_diag_dominant(gen, 12, 0.2);
  std::stringstream ss;
  write_matrix_market(ss, A);
  auto B = read_matrix_market(ss);
  REQUIRE(B.rows() == A.rows());
  REQUIRE(B.nnz() == A.nnz());
  for (Index i = 0; i < A.rows(); ++i)
    for (Index p = A.row_offsets()[i]; p < A.row_offsets()[i + 1]; ++p)
      CHECK(B.coeff(i, A.col_indices()[p]) == A.values()[p]);
}

TEST_CASE("reader accepts comments and real field") {
  std::stringstream ss;
  ss << "%%MatrixMarket matrix coordinate real general\n"
     << "% a comment line\n"
     << "2 2 3\n"
     << "1 1 1.5\n"
     << "2 2 -2.0\n"
     << "1 2 0.25\n";
  auto A = read_matrix_market(ss);
  CHECK(A.coeff(0, 0) == Complex(1.5));
  CHECK(A.coeff(0, 1) == Complex(0.25));
  CHECK(A.coeff(1, 1) == Complex(-2.0));
}

TEST_CASE("reader rejects bad banner") {
  std::stringstream ss;
  ss << "%%NotMatrixMarket matrix coordinate real general\n1 1 1\n1 1 1.0\n";
  CHECK_THROWS_AS(read_matrix_market(ss), IOError);
}

TEST_CASE("header says complex general and prints 17 digits") {
  SparseBuilder b(1, 1);
  b.add(0, 0, Complex(1.0 / 3.0, -2.0 / 7.0));
  std::stringstream ss;
  write_matrix_market(ss, b.build());
  std::string line;
  std::getline(ss, line);
  CHECK(line == "%%MatrixMarket matrix coordinate complex general");
  std::getline(ss, line);  // sizes
  std::getline(ss, line);
  CHECK(line.find("0.33333333333333331") != std::string::npos);
  CHECK(line.find("-0.2857142857142857") != std::string::npos);
}

#pragma once

#include <iosfwd>
#include <string>

#include "helmlab/linalg/dense.hpp"
#include "helmlab/linalg/sparse.hpp"

namespace helmlab::linalg {

/// Matrix Market exchange format, complex general. Values are printed with
/// 17 significant digits.
void write_matrix_market(std::ostream& os, const SparseMatrix& A);
void write_matrix_market_file(const std::string& path, const SparseMatrix& A);

SparseMatrix read_matrix_market(std::istream& is);
SparseMatrix read_matrix_market_file(const std::string& path);

/// Dense array variant (complex general), used for deflation-basis export.
void write_matrix_market_dense(std::ostream& os, const DenseMatrix& A);
void write_matrix_market_dense_file(const std::string& path, const DenseMatrix& A);

/// RHS vectors travel as N x 1 dense arrays.
void write_matrix_market_vector_file(const std::string& path, const Vector& b);

}  // namespace helmlab::linalg

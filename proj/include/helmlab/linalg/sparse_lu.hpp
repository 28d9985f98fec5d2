#pragma once

#include "helmlab/linalg/sparse.hpp"

namespace helmlab::linalg {

/// Sparse LU with partial pivoting, preceded by reverse-Cuthill-McKee
/// ordering on the symmetrized pattern. Left-looking factorization with
/// fill-in (Gilbert-Peierls); intended for the desk-scale systems here.
class SparseLU {
public:
  SparseLU() = default;
  explicit SparseLU(const SparseMatrix& A);

  Index size() const { return n_; }
  Index nnz_factors() const;

  Vector solve(const Vector& b) const;

private:
  struct CscFactor {
    std::vector<Index> col_ptr;
    std::vector<Index> row_ind;
    Vector values;
  };

  Index n_ = 0;
  std::vector<Index> order_;      // RCM permutation: ordered position -> original index
  std::vector<Index> pivot_row_;  // permuted row -> pivot position
  CscFactor L_;                   // unit diagonal stored explicitly (first entry of column)
  CscFactor U_;                   // diagonal stored last in each column
};

/// Reverse-Cuthill-McKee ordering of the symmetrized sparsity pattern.
std::vector<Index> rcm_ordering(const SparseMatrix& A);

}  // namespace helmlab::linalg

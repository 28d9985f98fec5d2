#pragma once

#include "helmlab/linalg/dense.hpp"

namespace helmlab::linalg {

struct EigenDecomposition {
  Vector eigenvalues;
  DenseMatrix right_vectors;  // unit 2-norm columns
  DenseMatrix left_vectors;   // columns v_hat_i with v_hat_i^H v_i = 1
  RealVector kappa;           // per-eigenvalue condition ||v_hat_i|| ||v_i||
  bool ill_conditioned_basis = false;  // right-vector matrix condition > 1e12
};

/// Eigenvalues of an upper-Hessenberg matrix by single-shift (Wilkinson)
/// complex QR iteration. Throws ConvergenceFailure after 30n sweeps.
Vector hessenberg_eigenvalues(const DenseMatrix& H);

/// Full decomposition: Hessenberg reduction, QR with Schur-vector
/// accumulation, eigenvectors by back-substitution; left vectors from the
/// inverse of the right-vector matrix so the biorthogonality v_hat_i^H v_j
/// = delta_ij holds by construction.
EigenDecomposition dense_eig(const DenseMatrix& A);

}  // namespace helmlab::linalg

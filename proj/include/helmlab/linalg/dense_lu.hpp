#pragma once

#include "helmlab/linalg/dense.hpp"

namespace helmlab::linalg {

/// Dense LU with row partial pivoting, for the small matrices of the
/// two-level setup (E = Z^H A Z) and eigenvector inversion.
class DenseLU {
public:
  DenseLU() = default;
  explicit DenseLU(DenseMatrix A);

  Index size() const { return lu_.rows(); }

  Vector solve(const Vector& b) const;

  /// Solves A^H x = b using the same factorization.
  Vector solve_adjoint(const Vector& b) const;

  DenseMatrix inverse() const;

  /// Product of |U_ii|; zero signals singularity.
  double abs_det() const;

private:
  DenseMatrix lu_;
  std::vector<Index> piv_;
};

}  // namespace helmlab::linalg

#pragma once

#include "helmlab/linalg/dense.hpp"

namespace helmlab::linalg {

/// Minimizer of ||Mx - b||_2 via Householder QR. Requires nrows >= ncols
/// and full column rank; raises RankDeficientError when
/// |R_ii| < 1e-14 * ||M||_F.
Vector least_squares_solve(const DenseMatrix& M, const Vector& b);

}  // namespace helmlab::linalg

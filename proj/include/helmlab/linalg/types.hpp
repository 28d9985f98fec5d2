#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace helmlab::linalg {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;
using RealVector = std::vector<double>;
using Index = std::size_t;

inline constexpr Index npos = static_cast<Index>(-1);

/// Conjugated inner product <x, y> = sum conj(x_i) y_i.
Complex dot(const Vector& x, const Vector& y);

double norm2(const Vector& x);

/// y += alpha * x
void axpy(Complex alpha, const Vector& x, Vector& y);

/// x *= alpha
void scale(Complex alpha, Vector& x);

bool all_finite(const Vector& x);

}  // namespace helmlab::linalg

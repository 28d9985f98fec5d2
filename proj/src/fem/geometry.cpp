#include "helmlab/fem/geometry.hpp"

#include <cmath>

#include "helmlab/errors.hpp"

namespace helmlab::fem {

void GeometryParams::cavity_interior(double& x0, double& x1, double& y0,
                                     double& y1) const {
  x0 = anchor_x();
  x1 = x0 + L_O;
  y0 = -0.5 * l_O;
  y1 = 0.5 * l_O;
}

void GeometryParams::validate() const {
  if (L_x <= 0 || L_y <= 0) throw GeometryError("domain half-lengths must be positive");
  if (L_pml < 0) throw GeometryError("PML thickness must be nonnegative");
  if (k <= 0) throw GeometryError("wavenumber must be positive");
  if (cavity) {
    if (L_O <= 0 || l_O <= 0 || t_w <= 0)
      throw GeometryError("cavity dimensions must be positive");
    double x0, x1, y0, y1;
    cavity_interior(x0, x1, y0, y1);
    const double bx0 = x0, bx1 = x1 + t_w;       // walls on the right
    const double by0 = y0 - t_w, by1 = y1 + t_w; // and above/below
    if (!(bx0 > -L_x && bx1 < L_x && by0 > -L_y && by1 < L_y))
      throw GeometryError("cavity walls must lie strictly inside Omega_dom");
  }
}

Complex pml_stretch(double x, Axis axis, const GeometryParams& g) {
  const double L = axis == Axis::x ? g.L_x : g.L_y;
  const double ax = std::abs(x);
  if (ax >= L + g.L_pml)
    throw DomainError("pml_stretch: evaluation on or beyond the outer boundary");
  if (ax <= L) return Complex(1.0, 0.0);
  const double sigma = 1.0 / (g.L_pml - ax + L);
  return Complex(1.0, sigma / g.k);
}

double dofs_per_wavelength_to_h(double n_lambda, double k, int p) {
  if (p < 1 || p > 3) throw GeometryError("element order must be 1, 2 or 3");
  if (n_lambda < 2.0 * p)
    throw GeometryError("need at least 2p dofs per wavelength");
  if (k <= 0) throw GeometryError("wavenumber must be positive");
  return 2.0 * 3.14159265358979323846 * p / (k * n_lambda);
}

}  // namespace helmlab::fem

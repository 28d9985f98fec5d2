#pragma once

#include <optional>

#include "helmlab/linalg/types.hpp"

namespace helmlab::fem {

using linalg::Complex;
using linalg::Index;

/// Scattering setup: rectangle Omega_dom = (-L_x,L_x) x (-L_y,L_y) minus a
/// U-shaped open cavity, surrounded by a PML of thickness L_pml. The cavity
/// interior measures L_O x l_O, is open on its left edge and enclosed by
/// walls of thickness t_w on the other three sides.
struct GeometryParams {
  double L_x = 2.0;
  double L_y = 1.5;
  double L_pml = 0.5;

  bool cavity = true;
  double L_O = 1.3;
  double l_O = 0.4;
  double t_w = 0.1;
  /// x of the open (left) edge of the cavity interior; default centers the
  /// obstacle bounding box at the origin.
  std::optional<double> cavity_anchor_x;

  double theta = 0.4 * 3.14159265358979323846;  // incident angle
  double k = 23.591;                            // wavenumber

  double anchor_x() const {
    return cavity_anchor_x ? *cavity_anchor_x : -0.5 * (L_O + t_w);
  }

  /// Cavity interior box [x0, x1] x [y0, y1].
  void cavity_interior(double& x0, double& x1, double& y0, double& y1) const;

  /// Throws GeometryError when lengths are inconsistent or the obstacle is
  /// not strictly inside Omega_dom.
  void validate() const;
};

enum class Axis { x, y };

/// PML stretching gamma(x) = 1 + i sigma(x)/k with sigma = 1/(L_pml - |x| + L)
/// inside the layer and 0 in Omega_dom. Singular on the outer boundary;
/// evaluation there raises DomainError.
Complex pml_stretch(double x, Axis axis, const GeometryParams& g);

/// Mesh size giving n_lambda dofs per wavelength for Lagrange order p:
/// h = 2 pi p / (k n_lambda). Requires n_lambda >= 2p.
double dofs_per_wavelength_to_h(double n_lambda, double k, int p);

}  // namespace helmlab::fem

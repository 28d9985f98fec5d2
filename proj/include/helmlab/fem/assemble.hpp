#pragma once

#include <functional>
#include <string>

#include "helmlab/fem/dofmap.hpp"
#include "helmlab/linalg/sparse.hpp"

namespace helmlab::fem {

using linalg::SparseMatrix;
using linalg::Vector;

struct AssembleOptions {
  /// Force gamma_x = gamma_y = 1 (used by the plain-Helmholtz oracle path).
  bool disable_stretching = false;
  /// Plane-wave Neumann data on Gamma_obs (the physical right-hand side).
  bool plane_wave_rhs = true;
  /// Optional volume source added to b (manufactured-solution runs).
  std::function<linalg::Complex(double, double)> volume_source;
};

struct AssembledSystem {
  SparseMatrix A;          // stiffness - k^2 mass
  SparseMatrix stiffness;  // K(gamma): grad-grad block with PML coefficients
  SparseMatrix mass;       // M(gamma): gamma_x gamma_y weighted mass
  Vector b;
  DofMap dofmap;

  Index size() const { return A.rows(); }
};

/// Weak form of the PML-Helmholtz problem on the reduced (Dirichlet
/// eliminated) dof set: A = K(gamma) - k^2 M(gamma), with
/// b_i = -int_{Gamma_obs} (dn u_inc) phi_i for the incident plane wave
/// u_inc = exp(ik(cos(theta) x + sin(theta) y)).
AssembledSystem assemble(const GeometryParams& g, const Mesh& mesh,
                         const DofMap& dofmap, const AssembleOptions& opts = {});

/// Element matrices of the bilinear form restricted to one triangle, in
/// local node order (shared by global assembly and the subdomain problems).
void element_matrices(const GeometryParams& g, const Mesh& mesh,
                      const DofMap& dofmap, Index element, bool disable_stretching,
                      linalg::DenseMatrix& k_elem, linalg::DenseMatrix& m_elem);

/// 1-D mass matrix of the order-p trace basis on a straight edge between
/// two mesh vertices, scaled by the edge length.
void edge_mass_matrix(const Mesh& mesh, int p, Index va, Index vb,
                      linalg::DenseMatrix& mass);

/// Matrix Market pair (matrix + RHS) export.
void write_system(const std::string& matrix_path, const std::string& rhs_path,
                  const AssembledSystem& sys);

}  // namespace helmlab::fem

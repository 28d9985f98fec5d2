#pragma once

#include "helmlab/fem/mesh.hpp"

namespace helmlab::fem {

/// Lagrange node numbering for orders 1-3 on triangles. Nodes on Gamma_ext
/// are eliminated from the system; `node_to_dof` maps them to npos.
struct DofMap {
  int p = 1;
  Index n_nodes = 0;  // all Lagrange nodes
  Index n_dofs = 0;   // after Dirichlet elimination

  /// Per element: (p+1)(p+2)/2 node ids in the reference ordering
  /// (vertices, then edge nodes per edge, then interior).
  std::vector<std::vector<Index>> element_nodes;
  std::vector<Index> node_to_dof;
  std::vector<Index> dof_to_node;
  std::vector<std::array<double, 2>> node_coords;

  /// Aligned with mesh.boundary_edges: the p+1 nodes of each boundary
  /// edge, ordered from v0 to v1.
  std::vector<std::vector<Index>> boundary_edge_nodes;

  std::array<double, 2> dof_coords(Index dof) const {
    return node_coords[dof_to_node[dof]];
  }

  Index nodes_per_element() const {
    return static_cast<Index>((p + 1) * (p + 2) / 2);
  }

  /// Ordered nodes (v0..v1) of local edge le in {0,1,2} of an element.
  std::vector<Index> element_edge_nodes(const Mesh& mesh, Index element,
                                        int local_edge) const;
};

DofMap build_dofmap(const Mesh& mesh, int p, bool dirichlet_on_ext = true);

/// Shape function values and reference gradients for the order-p basis at
/// a reference point; arrays sized nodes_per_element.
void shape_functions(int p, double xi, double eta, double* values,
                     double* grad_xi, double* grad_eta);

/// 1-D Lagrange basis on [0,1] over the trace nodes of an order-p edge
/// (equispaced, including endpoints): values at parameter t.
void edge_shape_functions(int p, double t, double* values);

}  // namespace helmlab::fem

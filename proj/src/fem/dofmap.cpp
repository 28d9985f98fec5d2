#include "helmlab/fem/dofmap.hpp"

#include <map>

#include "helmlab/errors.hpp"

namespace helmlab::fem {

namespace {

constexpr int kEdgeOf[3][2] = {{0, 1}, {1, 2}, {2, 0}};

// dN/d(lambda) for the cubic vertex function 0.5 l (3l-1)(3l-2).
double cubic_vertex(double l) { return 0.5 * l * (3.0 * l - 1.0) * (3.0 * l - 2.0); }
double cubic_vertex_d(double l) { return 0.5 * (27.0 * l * l - 18.0 * l + 2.0); }

}  // namespace

void shape_functions(int p, double xi, double eta, double* values,
                     double* grad_xi, double* grad_eta) {
  const double l[3] = {1.0 - xi - eta, xi, eta};
  const double dl_dxi[3] = {-1.0, 1.0, 0.0};
  const double dl_deta[3] = {-1.0, 0.0, 1.0};
  auto emit = [&](int idx, double v, double d0, double d1, double d2) {
    values[idx] = v;
    grad_xi[idx] = d0 * dl_dxi[0] + d1 * dl_dxi[1] + d2 * dl_dxi[2];
    grad_eta[idx] = d0 * dl_deta[0] + d1 * dl_deta[1] + d2 * dl_deta[2];
  };

  switch (p) {
    case 1:
      for (int i = 0; i < 3; ++i) {
        double d[3] = {0, 0, 0};
        d[i] = 1.0;
        emit(i, l[i], d[0], d[1], d[2]);
      }
      return;
    case 2:
      for (int i = 0; i < 3; ++i) {
        double d[3] = {0, 0, 0};
        d[i] = 4.0 * l[i] - 1.0;
        emit(i, l[i] * (2.0 * l[i] - 1.0), d[0], d[1], d[2]);
      }
      for (int e = 0; e < 3; ++e) {
        const int i = kEdgeOf[e][0], j = kEdgeOf[e][1];
        double d[3] = {0, 0, 0};
        d[i] = 4.0 * l[j];
        d[j] = 4.0 * l[i];
        emit(3 + e, 4.0 * l[i] * l[j], d[0], d[1], d[2]);
      }
      return;
    case 3: {
      for (int i = 0; i < 3; ++i) {
        double d[3] = {0, 0, 0};
        d[i] = cubic_vertex_d(l[i]);
        emit(i, cubic_vertex(l[i]), d[0], d[1], d[2]);
      }
      for (int e = 0; e < 3; ++e) {
        const int i = kEdgeOf[e][0], j = kEdgeOf[e][1];
        // Node nearer vertex i, then node nearer vertex j.
        double d[3] = {0, 0, 0};
        d[i] = 4.5 * l[j] * (6.0 * l[i] - 1.0);
        d[j] = 4.5 * l[i] * (3.0 * l[i] - 1.0);
        emit(3 + 2 * e, 4.5 * l[i] * l[j] * (3.0 * l[i] - 1.0), d[0], d[1], d[2]);
        double d2[3] = {0, 0, 0};
        d2[j] = 4.5 * l[i] * (6.0 * l[j] - 1.0);
        d2[i] = 4.5 * l[j] * (3.0 * l[j] - 1.0);
        emit(3 + 2 * e + 1, 4.5 * l[i] * l[j] * (3.0 * l[j] - 1.0), d2[0], d2[1],
             d2[2]);
      }
      double d[3] = {27.0 * l[1] * l[2], 27.0 * l[0] * l[2], 27.0 * l[0] * l[1]};
      emit(9, 27.0 * l[0] * l[1] * l[2], d[0], d[1], d[2]);
      return;
    }
    default:
      throw GeometryError("unsupported element order");
  }
}

void edge_shape_functions(int p, double t, double* values) {
  for (int j = 0; j <= p; ++j) {
    double v = 1.0;
    const double tj = double(j) / p;
    for (int m = 0; m <= p; ++m) {
      if (m == j) continue;
      const double tm = double(m) / p;
      v *= (t - tm) / (tj - tm);
    }
    values[j] = v;
  }
}

std::vector<Index> DofMap::element_edge_nodes(const Mesh& mesh, Index element,
                                              int local_edge) const {
  const auto& tri = mesh.triangles[element];
  const auto& en = element_nodes[element];
  const Index a = tri[kEdgeOf[local_edge][0]];
  const Index b = tri[kEdgeOf[local_edge][1]];
  std::vector<Index> nodes;
  nodes.push_back(a);
  if (p >= 2)
    for (int q = 0; q < p - 1; ++q)
      nodes.push_back(en[3 + (p - 1) * local_edge + q]);
  nodes.push_back(b);
  return nodes;
}

DofMap build_dofmap(const Mesh& mesh, int p, bool dirichlet_on_ext) {
  if (p < 1 || p > 3) throw GeometryError("element order must be 1, 2 or 3");
  DofMap dm;
  dm.p = p;
  const Index nv = mesh.n_vertices();
  dm.node_coords.assign(mesh.vertices.begin(), mesh.vertices.end());

  // Edge nodes shared across elements, keyed by sorted vertex pair, stored
  // in the min->max direction.
  std::map<std::pair<Index, Index>, Index> edge_base;
  auto edge_nodes_of = [&](Index a, Index b) {
    const Index lo = std::min(a, b), hi = std::max(a, b);
    auto [it, inserted] = edge_base.try_emplace({lo, hi}, dm.node_coords.size());
    if (inserted) {
      for (int q = 1; q < p; ++q) {
        const double s = double(q) / p;
        dm.node_coords.push_back(
            {mesh.vertices[lo][0] + s * (mesh.vertices[hi][0] - mesh.vertices[lo][0]),
             mesh.vertices[lo][1] + s * (mesh.vertices[hi][1] - mesh.vertices[lo][1])});
      }
    }
    std::vector<Index> ids(p - 1);
    for (int q = 0; q < p - 1; ++q) ids[q] = it->second + q;
    if (a > b) std::reverse(ids.begin(), ids.end());
    return ids;
  };

  dm.element_nodes.resize(mesh.n_triangles());
  for (Index t = 0; t < mesh.n_triangles(); ++t) {
    const auto& tri = mesh.triangles[t];
    auto& en = dm.element_nodes[t];
    en.assign(tri.begin(), tri.end());
    if (p >= 2)
      for (int e = 0; e < 3; ++e) {
        auto ids = edge_nodes_of(tri[kEdgeOf[e][0]], tri[kEdgeOf[e][1]]);
        en.insert(en.end(), ids.begin(), ids.end());
      }
    if (p == 3) {
      en.push_back(dm.node_coords.size());
      dm.node_coords.push_back(
          {(mesh.vertices[tri[0]][0] + mesh.vertices[tri[1]][0] +
            mesh.vertices[tri[2]][0]) /
               3.0,
           (mesh.vertices[tri[0]][1] + mesh.vertices[tri[1]][1] +
            mesh.vertices[tri[2]][1]) /
               3.0});
    }
  }
  dm.n_nodes = dm.node_coords.size();

  // Boundary edge traces in v0->v1 order.
  dm.boundary_edge_nodes.resize(mesh.boundary_edges.size());
  for (Index be = 0; be < mesh.boundary_edges.size(); ++be) {
    const auto& edge = mesh.boundary_edges[be];
    auto& nodes = dm.boundary_edge_nodes[be];
    nodes.push_back(edge.v0);
    if (p >= 2) {
      auto ids = edge_nodes_of(edge.v0, edge.v1);
      nodes.insert(nodes.end(), ids.begin(), ids.end());
    }
    nodes.push_back(edge.v1);
  }

  // Dirichlet elimination on Gamma_ext.
  std::vector<char> eliminated(dm.n_nodes, 0);
  if (dirichlet_on_ext) {
    for (Index be = 0; be < mesh.boundary_edges.size(); ++be)
      if (mesh.boundary_edges[be].tag == BoundaryTag::gamma_ext)
        for (Index node : dm.boundary_edge_nodes[be]) eliminated[node] = 1;
  }
  dm.node_to_dof.assign(dm.n_nodes, linalg::npos);
  for (Index n = 0; n < dm.n_nodes; ++n) {
    if (!eliminated[n]) {
      dm.node_to_dof[n] = dm.dof_to_node.size();
      dm.dof_to_node.push_back(n);
    }
  }
  dm.n_dofs = dm.dof_to_node.size();
  return dm;
}

}  // namespace helmlab::fem

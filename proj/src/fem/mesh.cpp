#include "helmlab/fem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "helmlab/errors.hpp"

namespace helmlab::fem {

namespace {

// Grid lines along one axis: feature breakpoints subdivided to ~h.
std::vector<double> grid_lines(std::vector<double> breaks, double h) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               breaks.end());
  std::vector<double> lines;
  lines.push_back(breaks.front());
  for (Index s = 0; s + 1 < breaks.size(); ++s) {
    const double a = breaks[s], b = breaks[s + 1];
    const Index m = std::max<Index>(1, static_cast<Index>(std::ceil((b - a) / h - 1e-9)));
    for (Index i = 1; i <= m; ++i) lines.push_back(a + (b - a) * double(i) / double(m));
  }
  return lines;
}

struct ObstacleTest {
  bool enabled = false;
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;  // interior box
  double t_w = 0;

  bool contains(double x, double y) const {
    if (!enabled) return false;
    const bool in_x_span = x > x0 && x < x1 + t_w;
    if (!in_x_span) return false;
    if (y > y1 && y < y1 + t_w) return true;              // top wall
    if (y > y0 - t_w && y < y0) return true;              // bottom wall
    if (x > x1 && y > y0 && y < y1) return true;          // right wall
    return false;
  }
};

}  // namespace

Mesh build_mesh(const GeometryParams& g, double h_target) {
  g.validate();
  if (h_target <= 0) throw ResolutionError("h_target must be positive");
  if (g.cavity && h_target > g.t_w)
    throw ResolutionError("h_target exceeds the cavity wall thickness");

  ObstacleTest obs;
  std::vector<double> bx{-g.L_x - g.L_pml, -g.L_x, g.L_x, g.L_x + g.L_pml};
  std::vector<double> by{-g.L_y - g.L_pml, -g.L_y, g.L_y, g.L_y + g.L_pml};
  if (g.cavity) {
    obs.enabled = true;
    obs.t_w = g.t_w;
    g.cavity_interior(obs.x0, obs.x1, obs.y0, obs.y1);
    bx.insert(bx.end(), {obs.x0, obs.x1, obs.x1 + g.t_w});
    by.insert(by.end(), {obs.y0 - g.t_w, obs.y0, obs.y1, obs.y1 + g.t_w});
  }
  const auto xs = grid_lines(std::move(bx), h_target);
  const auto ys = grid_lines(std::move(by), h_target);
  const Index nx = xs.size() - 1, ny = ys.size() - 1;

  // Kept cells and the vertex remap.
  std::vector<char> kept(nx * ny, 0);
  for (Index j = 0; j < ny; ++j)
    for (Index i = 0; i < nx; ++i) {
      const double cx = 0.5 * (xs[i] + xs[i + 1]);
      const double cy = 0.5 * (ys[j] + ys[j + 1]);
      kept[j * nx + i] = !obs.contains(cx, cy);
    }

  Mesh mesh;
  mesh.ncells_x = nx;
  mesh.ncells_y = ny;
  std::vector<Index> vmap((nx + 1) * (ny + 1), linalg::npos);
  auto vid = [&](Index i, Index j) -> Index& { return vmap[j * (nx + 1) + i]; };
  auto ensure_vertex = [&](Index i, Index j) {
    Index& v = vid(i, j);
    if (v == linalg::npos) {
      v = mesh.vertices.size();
      mesh.vertices.push_back({xs[i], ys[j]});
    }
    return v;
  };

  for (Index j = 0; j < ny; ++j)
    for (Index i = 0; i < nx; ++i) {
      if (!kept[j * nx + i]) continue;
      const Index v00 = ensure_vertex(i, j);
      const Index v10 = ensure_vertex(i + 1, j);
      const Index v11 = ensure_vertex(i + 1, j + 1);
      const Index v01 = ensure_vertex(i, j + 1);
      const double cx = 0.5 * (xs[i] + xs[i + 1]);
      const double cy = 0.5 * (ys[j] + ys[j + 1]);
      const Region reg = (std::abs(cx) > g.L_x || std::abs(cy) > g.L_y)
                             ? Region::pml
                             : Region::dom;
      const Index t1 = mesh.triangles.size();
      mesh.triangles.push_back({v00, v10, v11});
      mesh.triangles.push_back({v00, v11, v01});
      mesh.regions.push_back(reg);
      mesh.regions.push_back(reg);
      mesh.cell_of_triangle.push_back({i, j});
      mesh.cell_of_triangle.push_back({i, j});

      auto removed = [&](std::ptrdiff_t di, std::ptrdiff_t dj) {
        const std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(i) + di;
        const std::ptrdiff_t jj = static_cast<std::ptrdiff_t>(j) + dj;
        if (ii < 0 || jj < 0 || ii >= static_cast<std::ptrdiff_t>(nx) ||
            jj >= static_cast<std::ptrdiff_t>(ny))
          return 1;  // outside the padded rectangle: Gamma_ext
        return kept[static_cast<Index>(jj) * nx + static_cast<Index>(ii)] ? 0 : 2;
      };
      auto push_edge = [&](Index a, Index b, int kind, Index tri) {
        mesh.boundary_edges.push_back(
            {a, b, kind == 1 ? BoundaryTag::gamma_ext : BoundaryTag::gamma_obs,
             tri});
      };
      if (int kind = removed(0, -1)) push_edge(v00, v10, kind, t1);      // bottom
      if (int kind = removed(+1, 0)) push_edge(v10, v11, kind, t1);      // right
      if (int kind = removed(0, +1)) push_edge(v11, v01, kind, t1 + 1);  // top
      if (int kind = removed(-1, 0)) push_edge(v01, v00, kind, t1 + 1);  // left
    }
  return mesh;
}

void write_mesh(std::ostream& os, const Mesh& mesh) {
  os << "helmlab-mesh v1\n";
  os << "vertices " << mesh.n_vertices() << "\n";
  os.precision(17);
  for (const auto& v : mesh.vertices) os << v[0] << " " << v[1] << "\n";
  os << "triangles " << mesh.n_triangles() << "\n";
  for (Index t = 0; t < mesh.n_triangles(); ++t) {
    const auto& tri = mesh.triangles[t];
    os << tri[0] << " " << tri[1] << " " << tri[2] << " "
       << (mesh.regions[t] == Region::pml ? "pml" : "dom") << "\n";
  }
  os << "boundary_edges " << mesh.boundary_edges.size() << "\n";
  for (const auto& e : mesh.boundary_edges)
    os << e.v0 << " " << e.v1 << " "
       << (e.tag == BoundaryTag::gamma_obs ? "obs" : "ext") << " " << e.element
       << "\n";
}

void write_mesh_file(const std::string& path, const Mesh& mesh) {
  std::ofstream os(path);
  if (!os) throw IOError("cannot open for writing: " + path);
  write_mesh(os, mesh);
}

}  // namespace helmlab::fem

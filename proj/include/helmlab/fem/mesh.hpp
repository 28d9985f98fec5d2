#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "helmlab/fem/geometry.hpp"

namespace helmlab::fem {

enum class BoundaryTag { gamma_obs, gamma_ext };
enum class Region { dom, pml };

struct BoundaryEdge {
  Index v0, v1;     // ordered CCW within the owning triangle
  BoundaryTag tag;
  Index element;    // adjacent triangle
};

/// Conforming triangulation of the padded rectangle with the U-shaped
/// obstacle removed. Triangles come in pairs per structured grid cell;
/// the cell indices are kept for geometric partitioning.
struct Mesh {
  std::vector<std::array<double, 2>> vertices;
  std::vector<std::array<Index, 3>> triangles;  // positively oriented
  std::vector<BoundaryEdge> boundary_edges;
  std::vector<Region> regions;  // per triangle

  Index ncells_x = 0, ncells_y = 0;
  std::vector<std::array<Index, 2>> cell_of_triangle;

  Index n_vertices() const { return vertices.size(); }
  Index n_triangles() const { return triangles.size(); }
};

/// Structured grid-aligned triangulation: grid lines include the PML
/// interfaces and the cavity wall lines, cells inside the obstacle are
/// removed, each remaining cell is split into two triangles.
Mesh build_mesh(const GeometryParams& g, double h_target);

/// Versioned text export (vertices/triangles/tags) for visualization.
void write_mesh(std::ostream& os, const Mesh& mesh);
void write_mesh_file(const std::string& path, const Mesh& mesh);

}  // namespace helmlab::fem

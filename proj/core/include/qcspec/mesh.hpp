#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "qcspec/maps.hpp"

namespace qcspec {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Triangulation with counterclockwise triangles and per-vertex boundary flags.
struct Mesh {
  std::vector<Point2> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<bool> boundary;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_triangles() const { return triangles.size(); }
  std::size_t num_boundary() const;
  std::size_t num_interior() const { return num_vertices() - num_boundary(); }
};

double signed_area(Point2 a, Point2 b, Point2 c);
double triangle_area(const Mesh& mesh, std::size_t t);
double total_area(const Mesh& mesh);
double min_triangle_area(const Mesh& mesh);

/// Concentric rings: ring k at radius k/rings carries 6k vertices. 6 rings^2 triangles.
Mesh unit_disc_mesh(int rings);

/// [0,a] x [0,b] split into nx*ny cells, each cut into two triangles.
Mesh rectangle_mesh(double a, double b, int nx, int ny);

/// Moves every vertex through the map; connectivity and flags are unchanged.
/// Throws DegenerateTriangle if an image triangle has signed area <= 1e-16.
Mesh pushforward_mesh(const Mesh& mesh, const MapFamily& family);

struct MeshCheck {
  bool positive_orientation = true;
  bool edge_manifold = true;
  bool boundary_consistent = true;  ///< flagged vertices are exactly the boundary-edge vertices
  bool ok() const { return positive_orientation && edge_manifold && boundary_consistent; }
};

MeshCheck check_mesh(const Mesh& mesh);

/// Text format: "V T", then V lines "x y flag", then T lines "i j k" (0-based).
void write_mesh(std::ostream& os, const Mesh& mesh);
Mesh read_mesh(std::istream& is);

}  // namespace qcspec

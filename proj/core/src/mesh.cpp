#include "qcspec/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <utility>

#include "qcspec/error.hpp"

namespace qcspec {

std::size_t Mesh::num_boundary() const {
  return static_cast<std::size_t>(std::count(boundary.begin(), boundary.end(), true));
}

double signed_area(Point2 a, Point2 b, Point2 c) {
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

double triangle_area(const Mesh& mesh, std::size_t t) {
  const auto& tri = mesh.triangles[t];
  return signed_area(mesh.vertices[tri[0]], mesh.vertices[tri[1]], mesh.vertices[tri[2]]);
}

double total_area(const Mesh& mesh) {
  double sum = 0.0;
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) sum += triangle_area(mesh, t);
  return sum;
}

double min_triangle_area(const Mesh& mesh) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) m = std::min(m, triangle_area(mesh, t));
  return m;
}

Mesh unit_disc_mesh(int rings) {
  if (rings < 2) throw Error(ErrorKind::InvalidRings, "unit_disc_mesh requires rings >= 2");
  Mesh mesh;
  const std::size_t nv = 1 + 3 * static_cast<std::size_t>(rings) * (rings + 1);
  mesh.vertices.reserve(nv);
  mesh.boundary.reserve(nv);
  mesh.vertices.push_back({0.0, 0.0});
  mesh.boundary.push_back(false);
  for (int k = 1; k <= rings; ++k) {
    const double r = static_cast<double>(k) / rings;
    const int count = 6 * k;
    for (int j = 0; j < count; ++j) {
      const double t = 2.0 * std::numbers::pi * j / count;
      mesh.vertices.push_back({r * std::cos(t), r * std::sin(t)});
      mesh.boundary.push_back(k == rings);
    }
  }

  // First vertex of ring k; ring 0 is the centre.
  auto ring_start = [](int k) { return k == 0 ? 0 : 1 + 3 * (k - 1) * k; };
  auto ring_vertex = [&](int k, int idx) {
    if (k == 0) return 0;
    return ring_start(k) + idx % (6 * k);
  };

  mesh.triangles.reserve(6 * static_cast<std::size_t>(rings) * rings);
  for (int k = 1; k <= rings; ++k) {
    for (int s = 0; s < 6; ++s) {
      auto outer = [&](int t) { return ring_vertex(k, s * k + t); };
      auto inner = [&](int t) { return ring_vertex(k - 1, s * (k - 1) + t); };
      for (int t = 0; t < k; ++t) {
        mesh.triangles.push_back({inner(t), outer(t), outer(t + 1)});
        if (t + 1 < k) mesh.triangles.push_back({inner(t), outer(t + 1), inner(t + 1)});
      }
    }
  }
  return mesh;
}

Mesh rectangle_mesh(double a, double b, int nx, int ny) {
  if (!(a > 0.0) || !(b > 0.0) || nx < 2 || ny < 2)
    throw Error(ErrorKind::InvalidDimensions, "rectangle_mesh requires a, b > 0 and nx, ny >= 2");
  Mesh mesh;
  auto id = [nx](int i, int j) { return j * (nx + 1) + i; };
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      // Exact endpoints so the area sums to a*b.
      const double x = i == nx ? a : a * i / nx;
      const double y = j == ny ? b : b * j / ny;
      mesh.vertices.push_back({x, y});
      mesh.boundary.push_back(i == 0 || j == 0 || i == nx || j == ny);
    }
  }
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      mesh.triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      mesh.triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return mesh;
}

Mesh pushforward_mesh(const Mesh& mesh, const MapFamily& family) {
  validate(family);
  Mesh out = mesh;
  for (auto& v : out.vertices) {
    if (v.x * v.x + v.y * v.y > 1.0 + 1e-12)
      throw Error(ErrorKind::InvalidInput, "pushforward_mesh requires vertices in the closed unit disc");
    const ComplexPoint w = evaluate_map(family, {v.x, v.y});
    v = {w.re, w.im};
  }
  for (std::size_t t = 0; t < out.num_triangles(); ++t) {
    if (triangle_area(out, t) <= 1e-16)
      throw Error(ErrorKind::DegenerateTriangle,
                  "image triangle " + std::to_string(t) + " is degenerate or inverted");
  }
  return out;
}

MeshCheck check_mesh(const Mesh& mesh) {
  MeshCheck check;
  std::map<std::pair<int, int>, int> edge_count;
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    if (!(triangle_area(mesh, t) > 0.0)) check.positive_orientation = false;
    const auto& tri = mesh.triangles[t];
    for (int e = 0; e < 3; ++e) {
      int a = tri[e], b = tri[(e + 1) % 3];
      if (a > b) std::swap(a, b);
      ++edge_count[{a, b}];
    }
  }
  std::vector<bool> on_boundary_edge(mesh.num_vertices(), false);
  for (const auto& [edge, count] : edge_count) {
    if (count < 1 || count > 2) check.edge_manifold = false;
    if (count == 1) on_boundary_edge[edge.first] = on_boundary_edge[edge.second] = true;
  }
  for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
    if (on_boundary_edge[v] != static_cast<bool>(mesh.boundary[v])) check.boundary_consistent = false;
  return check;
}

void write_mesh(std::ostream& os, const Mesh& mesh) {
  const auto old_precision = os.precision(17);
  os << mesh.num_vertices() << ' ' << mesh.num_triangles() << '\n';
  for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
    os << mesh.vertices[v].x << ' ' << mesh.vertices[v].y << ' ' << (mesh.boundary[v] ? 1 : 0) << '\n';
  for (const auto& tri : mesh.triangles) os << tri[0] << ' ' << tri[1] << ' ' << tri[2] << '\n';
  os.precision(old_precision);
}

Mesh read_mesh(std::istream& is) {
  std::size_t nv = 0, nt = 0;
  if (!(is >> nv >> nt)) throw Error(ErrorKind::InvalidInput, "mesh header must be 'V T'");
  Mesh mesh;
  mesh.vertices.resize(nv);
  mesh.boundary.resize(nv);
  mesh.triangles.resize(nt);
  for (std::size_t v = 0; v < nv; ++v) {
    int flag = 0;
    if (!(is >> mesh.vertices[v].x >> mesh.vertices[v].y >> flag))
      throw Error(ErrorKind::InvalidInput, "truncated vertex block");
    mesh.boundary[v] = flag != 0;
  }
  for (auto& tri : mesh.triangles) {
    if (!(is >> tri[0] >> tri[1] >> tri[2])) throw Error(ErrorKind::InvalidInput, "truncated triangle block");
    for (int idx : tri)
      if (idx < 0 || static_cast<std::size_t>(idx) >= nv)
        throw Error(ErrorKind::InvalidInput, "triangle references a missing vertex");
  }
  return mesh;
}

}  // namespace qcspec

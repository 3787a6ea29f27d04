#include "qcspec/fem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcspec/error.hpp"

namespace qcspec {

P1System assemble_p1(const Mesh& mesh, bool dirichlet) {
  P1System sys;
  const std::size_t nv = mesh.num_vertices();
  sys.dof_of_vertex.assign(nv, -1);
  for (std::size_t v = 0; v < nv; ++v) {
    if (dirichlet && mesh.boundary[v]) continue;
    sys.dof_of_vertex[v] = static_cast<int>(sys.vertex_of_dof.size());
    sys.vertex_of_dof.push_back(static_cast<int>(v));
  }
  const int n = static_cast<int>(sys.vertex_of_dof.size());

  std::vector<Triplet> kt, mt;
  kt.reserve(mesh.num_triangles() * 9);
  mt.reserve(mesh.num_triangles() * 9);
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangles[t];
    const Point2 p[3] = {mesh.vertices[tri[0]], mesh.vertices[tri[1]], mesh.vertices[tri[2]]};
    const double area = signed_area(p[0], p[1], p[2]);
    if (area <= 1e-16)
      throw Error(ErrorKind::DegenerateTriangle, "triangle " + std::to_string(t) + " has area below 1e-16");
    // Edge opposite vertex i; grad(phi_i) is that edge rotated by 90 degrees over 2A.
    double ex[3], ey[3];
    for (int i = 0; i < 3; ++i) {
      const Point2 a = p[(i + 1) % 3], b = p[(i + 2) % 3];
      ex[i] = b.x - a.x;
      ey[i] = b.y - a.y;
    }
    for (int i = 0; i < 3; ++i) {
      const int di = sys.dof_of_vertex[tri[i]];
      if (di < 0) continue;
      for (int j = 0; j < 3; ++j) {
        const int dj = sys.dof_of_vertex[tri[j]];
        if (dj < 0) continue;
        kt.push_back({di, dj, (ex[i] * ex[j] + ey[i] * ey[j]) / (4.0 * area)});
        mt.push_back({di, dj, area / 12.0 * (i == j ? 2.0 : 1.0)});
      }
    }
  }
  sys.stiffness = SparseMatrix::from_triplets(n, n, std::move(kt));
  sys.mass = SparseMatrix::from_triplets(n, n, std::move(mt));
  return sys;
}

namespace {

double m_norm(const SparseMatrix& m, std::span<const double> u, std::vector<double>& scratch) {
  m.multiply(u, scratch);
  return std::sqrt(dot(u, scratch));
}

}  // namespace

EigenResult smallest_eigenpair(const SparseMatrix& k, const SparseMatrix& m, const EigenOptions& options) {
  const int n = k.rows();
  if (n < 1 || k.cols() != n || m.rows() != n || m.cols() != n)
    throw Error(ErrorKind::InvalidDimensions, "stiffness and mass must be square, equal-sized and non-empty");
  if (!(options.tol > 0.0) || !(options.cg_tol > 0.0))
    throw Error(ErrorKind::InvalidInput, "tolerances must be positive");

  std::vector<double> u(n, 1.0), mu(n), ku(n), x(n);
  double nrm = m_norm(m, u, mu);
  if (!(nrm > 0.0)) throw Error(ErrorKind::SingularSystem, "mass matrix annihilates the start vector");
  for (double& v : u) v /= nrm;
  k.multiply(u, ku);
  double lambda = dot(u, ku);

  EigenResult res;
  const int cg_max = std::max(1000, 20 * n);
  std::vector<double> r(n);
  auto relative_residual = [&] {
    for (int i = 0; i < n; ++i) r[i] = ku[i] - lambda * mu[i];
    return norm2(r) / (lambda * norm2(mu));
  };
  double prev_rel = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (res.iterations = 1; res.iterations <= options.max_outer; ++res.iterations) {
    m.multiply(u, mu);
    // Warm start: the exact solution is u / lambda once u is an eigenvector.
    for (int i = 0; i < n; ++i) x[i] = u[i] / lambda;
    const CgResult cg = conjugate_gradient(k, mu, x, options.cg_tol, cg_max);
    res.cg_iterations += cg.iterations;
    if (!cg.converged)
      throw Error(ErrorKind::SingularSystem,
                  "CG stagnated at relative residual " + std::to_string(cg.relative_residual));
    nrm = m_norm(m, x, mu);
    if (!(nrm > 0.0)) throw Error(ErrorKind::SingularSystem, "inverse iterate vanished");
    for (int i = 0; i < n; ++i) u[i] = x[i] / nrm;
    m.multiply(u, mu);
    k.multiply(u, ku);
    const double lambda_new = dot(u, ku);
    const double change = std::abs(lambda_new - lambda) / lambda_new;
    lambda = lambda_new;
    // The eigenvector lags the eigenvalue (error ratio l1/l2 vs (l1/l2)^2), so the
    // residual is required to settle too: below tol, or no longer decreasing (rounding floor).
    const double rel = relative_residual();
    const bool residual_done = rel <= options.tol || rel >= prev_rel;
    prev_rel = rel;
    if (change < options.tol && residual_done) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw Error(ErrorKind::NoConvergence, "inverse iteration did not converge in " +
                                              std::to_string(options.max_outer) + " steps");

  res.lambda = lambda;
  res.relative_residual = relative_residual();
  res.residual = norm2(r);
  res.eigenvector = std::move(u);
  return res;
}

EigenResult mesh_eigenvalue(const Mesh& mesh, const EigenOptions& options) {
  const P1System sys = assemble_p1(mesh);
  return smallest_eigenpair(sys.stiffness, sys.mass, options);
}

FemSolution principal_eigenvalue(const MapFamily& family, int rings, const EigenOptions& options) {
  validate(family);
  const Mesh mesh = pushforward_mesh(unit_disc_mesh(rings), family);
  const P1System sys = assemble_p1(mesh);
  FemSolution sol;
  sol.eigen = smallest_eigenpair(sys.stiffness, sys.mass, options);
  sol.rings = rings;
  sol.vertices = mesh.num_vertices();
  sol.triangles = mesh.num_triangles();
  sol.dofs = sys.vertex_of_dof.size();
  sol.mesh_area = total_area(mesh);
  sol.min_triangle_area = min_triangle_area(mesh);
  return sol;
}

}  // namespace qcspec

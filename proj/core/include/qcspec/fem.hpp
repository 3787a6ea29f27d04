#pragma once

#include <vector>

#include "qcspec/maps.hpp"
#include "qcspec/mesh.hpp"
#include "qcspec/sparse.hpp"

namespace qcspec {

/// P1 stiffness and consistent mass matrices over the free vertices.
struct P1System {
  SparseMatrix stiffness;
  SparseMatrix mass;
  std::vector<int> dof_of_vertex;  ///< -1 for eliminated (boundary) vertices
  std::vector<int> vertex_of_dof;
};

/// Assembles the weak form of -Laplace u = lambda u with piecewise-linear hats.
/// With `dirichlet` set, boundary-flagged vertices are eliminated (u = 0 there);
/// otherwise every vertex is a degree of freedom.
P1System assemble_p1(const Mesh& mesh, bool dirichlet = true);

struct EigenOptions {
  double tol = 1e-10;            ///< relative change of lambda between outer steps
  double cg_tol = 1e-12;         ///< relative residual of inner solves
  int max_outer = 10000;
};

struct EigenResult {
  double lambda = 0.0;
  std::vector<double> eigenvector;  ///< M-normalized, over degrees of freedom
  double residual = 0.0;            ///< ||K u - lambda M u||_2
  double relative_residual = 0.0;   ///< residual / (lambda ||M u||_2)
  int iterations = 0;               ///< outer iterations
  long cg_iterations = 0;           ///< summed inner iterations
};

/// Smallest eigenpair of K u = lambda M u by inverse power iteration with CG
/// inner solves, starting from the M-normalized all-ones vector.
EigenResult smallest_eigenpair(const SparseMatrix& k, const SparseMatrix& m,
                               const EigenOptions& options = {});

struct FemSolution {
  EigenResult eigen;
  int rings = 0;
  std::size_t vertices = 0;
  std::size_t triangles = 0;
  std::size_t dofs = 0;
  double mesh_area = 0.0;
  double min_triangle_area = 0.0;
};

/// lambda_1 of the image of the unit disc: ring mesh, pushforward, assemble, solve.
FemSolution principal_eigenvalue(const MapFamily& family, int rings,
                                 const EigenOptions& options = {});

/// lambda_1 of an arbitrary mesh with Dirichlet conditions on its flagged boundary.
EigenResult mesh_eigenvalue(const Mesh& mesh, const EigenOptions& options = {});

}  // namespace qcspec

#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "qcspec/bounds.hpp"
#include "qcspec/error.hpp"
#include "qcspec/fem.hpp"

using namespace qcspec;

namespace {

const double kJ2 = 2.404825557695773 * 2.404825557695773;

Eigen::MatrixXd dense(const SparseMatrix& a) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(a.rows(), a.cols());
  const auto off = a.row_offsets();
  const auto col = a.col_indices();
  const auto val = a.values();
  for (int r = 0; r < a.rows(); ++r)
    for (int k = off[r]; k < off[r + 1]; ++k) d(r, col[k]) = val[k];
  return d;
}

// Independent route: dense generalized symmetric eigensolver.
double dense_smallest(const P1System& sys) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(sys.stiffness), dense(sys.mass));
  return es.eigenvalues()(0);
}

}  // namespace

TEST_CASE("CSR construction") {
  const SparseMatrix m = SparseMatrix::from_triplets(3, 3, {{0, 0, 1.0}, {2, 1, 2.0}, {0, 0, 1.5}, {1, 2, 0.0}, {2, 0, -1.0}});
  CHECK(m.nonzeros() == 3);
  CHECK(m.at(0, 0) == 2.5);
  CHECK(m.at(2, 1) == 2.0);
  CHECK(m.at(1, 2) == 0.0);
  const auto cols = m.col_indices();
  const auto off = m.row_offsets();
  for (int r = 0; r < 3; ++r)
    for (int k = off[r] + 1; k < off[r + 1]; ++k) CHECK(cols[k - 1] < cols[k]);
  CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{2, 0, 1.0}}), Error);
}

TEST_CASE("reference element") {
  Mesh tri;
  tri.vertices = {{0, 0}, {1, 0}, {0, 1}};
  tri.triangles = {{0, 1, 2}};
  tri.boundary = {false, false, false};
  const P1System sys = assemble_p1(tri);
  const double expect[3][3] = {{1, -0.5, -0.5}, {-0.5, 0.5, 0}, {-0.5, 0, 0.5}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(sys.stiffness.at(i, j) == doctest::Approx(expect[i][j]).epsilon(1e-15));
  CHECK(sys.mass.at(0, 0) == doctest::Approx(1.0 / 12));
  CHECK(sys.mass.at(0, 1) == doctest::Approx(1.0 / 24));
  CHECK(sys.mass.sum() == doctest::Approx(0.5));
}

TEST_CASE("mass matrix partitions the area") {
  const Mesh m = pushforward_mesh(unit_disc_mesh(10), RosePetal{0.7});
  const P1System full = assemble_p1(m, false);
  CHECK(full.mass.sum() == doctest::Approx(total_area(m)).epsilon(1e-13));
  // stiffness annihilates constants
  const std::vector<double> ones(full.vertex_of_dof.size(), 1.0);
  for (double v : full.stiffness.multiply(ones)) CHECK(std::abs(v) < 1e-12);
  const P1System dir = assemble_p1(m);
  CHECK(dir.vertex_of_dof.size() == m.num_interior());
}

TEST_CASE("degenerate triangle is rejected at assembly") {
  Mesh tri;
  tri.vertices = {{0, 0}, {1, 0}, {2, 0}};
  tri.triangles = {{0, 1, 2}};
  tri.boundary = {false, false, false};
  try {
    assemble_p1(tri);
    FAIL("expected degenerate-triangle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateTriangle);
  }
}

TEST_CASE("hand oracles") {
  SUBCASE("1x1 pencil") {
    const SparseMatrix k = SparseMatrix::from_triplets(1, 1, {{0, 0, 2.0}});
    const SparseMatrix m = SparseMatrix::from_triplets(1, 1, {{0, 0, 0.5}});
    const EigenResult r = smallest_eigenpair(k, m);
    CHECK(r.lambda == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(r.eigenvector[0] * r.eigenvector[0] * 0.5 == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("single interior vertex of the 2x2 unit square mesh") {
    // six triangles of area 1/8 around (1/2, 1/2): K = 4, M = 6 * (2/12) * (1/8) = 1/8
    const P1System sys = assemble_p1(rectangle_mesh(1, 1, 2, 2));
    REQUIRE(sys.stiffness.rows() == 1);
    CHECK(sys.stiffness.at(0, 0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(sys.mass.at(0, 0) == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(smallest_eigenpair(sys.stiffness, sys.mass).lambda == doctest::Approx(32.0).epsilon(1e-13));
  }
}

TEST_CASE("assembled matrices are symmetric positive definite") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  for (const MapFamily& f : {MapFamily{Identity{}}, MapFamily{Ellipse{0.25}}, MapFamily{RosePetal{0.9}},
                             MapFamily{Epicycloid{0.2, 0.05, 3}}}) {
    const P1System sys = assemble_p1(pushforward_mesh(unit_disc_mesh(12), f));
    CHECK(sys.stiffness.asymmetry() <= 1e-14);
    CHECK(sys.mass.asymmetry() <= 1e-14);
    const std::size_t n = sys.vertex_of_dof.size();
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> u(n);
      for (double& x : u) x = g(rng);
      CHECK(dot(u, sys.stiffness.multiply(u)) > 0.0);
      CHECK(dot(u, sys.mass.multiply(u)) > 0.0);
    }
  }
}

TEST_CASE("inverse iteration agrees with a dense generalized eigensolver") {
  for (const MapFamily& f : {MapFamily{Identity{}}, MapFamily{Ellipse{0.3}}, MapFamily{RosePetal{0.6}},
                             MapFamily{Epicycloid{0.2, 0.05, 3}}, MapFamily{Epicycloid{0.15, 0.05, 5}}}) {
    const P1System sys = assemble_p1(pushforward_mesh(unit_disc_mesh(8), f));
    const EigenResult r = smallest_eigenpair(sys.stiffness, sys.mass);
    INFO(family_name(f));
    CHECK(r.lambda == doctest::Approx(dense_smallest(sys)).epsilon(1e-9));
  }
}

TEST_CASE("eigen result invariants") {
  const P1System sys = assemble_p1(pushforward_mesh(unit_disc_mesh(24), RosePetal{0.8}));
  const EigenOptions opt;
  const EigenResult r = smallest_eigenpair(sys.stiffness, sys.mass, opt);
  const auto mu = sys.mass.multiply(r.eigenvector);
  const auto ku = sys.stiffness.multiply(r.eigenvector);
  CHECK(r.lambda > 0);
  CHECK(std::abs(dot(r.eigenvector, mu) - 1.0) <= 1e-12);
  CHECK(r.lambda == doctest::Approx(dot(r.eigenvector, ku) / dot(r.eigenvector, mu)).epsilon(1e-12));
  CHECK(r.relative_residual <= opt.tol);
  // principal eigenvector does not change sign
  int pos = 0, neg = 0;
  for (double v : r.eigenvector) (v > 0 ? pos : neg)++;
  CHECK((pos == 0 || neg == 0));
}

TEST_CASE("solver errors") {
  const SparseMatrix k = SparseMatrix::from_triplets(2, 2, {{0, 0, 1.0}, {1, 1, 1.0}});
  const SparseMatrix m1 = SparseMatrix::from_triplets(1, 1, {{0, 0, 1.0}});
  CHECK_THROWS_AS(smallest_eigenpair(k, m1), Error);
  // indefinite "stiffness": CG breaks down
  const SparseMatrix bad = SparseMatrix::from_triplets(2, 2, {{0, 0, 1.0}, {1, 1, -1.0}});
  const SparseMatrix m = SparseMatrix::from_triplets(2, 2, {{0, 0, 1.0}, {1, 1, 1.0}});
  try {
    smallest_eigenpair(bad, m);
    FAIL("expected singular-system");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularSystem);
  }
  // outer budget too small
  const P1System sys = assemble_p1(unit_disc_mesh(8));
  EigenOptions opt;
  opt.max_outer = 2;
  try {
    smallest_eigenpair(sys.stiffness, sys.mass, opt);
    FAIL("expected no-convergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConvergence);
  }
}

TEST_CASE("disc eigenvalue approaches j01^2 from above") {
  std::vector<double> lam;
  for (int rings : {16, 32, 64}) {
    lam.push_back(principal_eigenvalue(Identity{}, rings).eigen.lambda);
    CHECK(lam.back() >= kJ2 - 1e-10);
  }
  CHECK(lam[0] - lam[1] > 0);
  CHECK(lam[1] - lam[2] > 0);
  CHECK(lam[2] <= 1.01 * kJ2);
  const double richardson = (4 * lam[2] - lam[1]) / 3;
  CHECK(std::abs(richardson - kJ2) / kJ2 < 2e-3);
}

TEST_CASE("rectangle eigenvalues lie above pi^2 (1/a^2 + 1/b^2)") {
  for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 1.0}}) {
    const double exact = M_PI * M_PI * (1 / (a * a) + 1 / (b * b));
    double prev = INFINITY;
    for (int n : {8, 16, 32}) {
      const double l = mesh_eigenvalue(rectangle_mesh(a, b, n, n)).lambda;
      CHECK(l >= exact - 1e-10);
      CHECK(l < prev);
      prev = l;
    }
  }
}

TEST_CASE("principal eigenvalue examples") {
  const FemSolution disc = principal_eigenvalue(Identity{}, 64);
  CHECK(disc.eigen.lambda >= kJ2);
  CHECK(disc.eigen.lambda <= 5.86);
  CHECK(disc.triangles == 6u * 64 * 64);

  const FemSolution ell = principal_eigenvalue(Ellipse{0.125}, 64);
  CHECK(ell.eigen.lambda >= 4.5072);
  CHECK(ell.eigen.lambda >= 3.1662);
}

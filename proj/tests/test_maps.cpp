#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qcspec/error.hpp"
#include "qcspec/maps.hpp"
#include "qcspec/qc_analysis.hpp"

using namespace qcspec;
using cplx = std::complex<double>;

namespace {

std::vector<ComplexPoint> interior_samples(int count, double max_radius, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<ComplexPoint> pts;
  while (static_cast<int>(pts.size()) < count) {
    const double r = max_radius * std::sqrt(u(rng));
    const double t = 2.0 * M_PI * u(rng);
    pts.push_back({r * std::cos(t), r * std::sin(t)});
  }
  return pts;
}

std::vector<MapFamily> families() {
  return {Identity{},          Ellipse{0.0},   Ellipse{0.125},          Ellipse{0.5},
          RosePetal{0.5},      RosePetal{0.9}, Epicycloid{0.2, 0.05, 3}, Epicycloid{0.15, 0.05, 5},
          Epicycloid{1.0, 0.0, 2}};
}

cplx eval(const MapFamily& f, double x, double y) { return evaluate_map(f, {x, y}).to_complex(); }

}  // namespace

TEST_CASE("evaluate_map examples") {
  CHECK(evaluate_map(Identity{}, {0.3, 0.4}) == ComplexPoint{0.3, 0.4});

  for (double a : {0.0, 0.125, 0.5, 2.0}) {
    const double s = std::sqrt(a * a + 1.0);
    const ComplexPoint v = evaluate_map(Ellipse{a}, {1.0, 0.0});
    CHECK(v.re == doctest::Approx(s + a).epsilon(1e-15));
    CHECK(v.im == doctest::Approx(0.0));
  }

  const ComplexPoint cusp = evaluate_map(RosePetal{0.7}, {-1.0, 0.0});
  CHECK(cusp.re == 0.0);
  CHECK(cusp.im == 0.0);
  // continuity at the cusp
  CHECK(evaluate_map(RosePetal{0.7}, {-1.0 + 1e-12, 0.0}).abs() < 1e-11);
}

TEST_CASE("ellipse vertices are the semi-axes") {
  for (double a : {0.0, 0.0625, 0.3, 1.0}) {
    const double s = std::sqrt(a * a + 1.0);
    const Ellipse e{a};
    CHECK(evaluate_map(e, {1, 0}).re == doctest::Approx(s + a));
    CHECK(evaluate_map(e, {-1, 0}).re == doctest::Approx(-(s + a)));
    CHECK(evaluate_map(e, {0, 1}).im == doctest::Approx(s - a));
    CHECK(evaluate_map(e, {0, -1}).im == doctest::Approx(-(s - a)));
    CHECK(std::abs(evaluate_map(e, {0, 1}).re) < 1e-15);
  }
}

TEST_CASE("rose petal boundary follows rho = 2a cos 2theta") {
  const double a = 0.8;
  for (int k = 1; k < 64; ++k) {
    const double t = -M_PI + 2.0 * M_PI * k / 64.0;
    const cplx w = evaluate_map(RosePetal{a}, {std::cos(t), std::sin(t)}).to_complex();
    const double theta = std::arg(w);
    CHECK(std::abs(theta) <= M_PI / 4 + 1e-12);
    CHECK(std::abs(w) == doctest::Approx(2.0 * a * std::cos(2.0 * theta)).epsilon(1e-12));
  }
}

TEST_CASE("wirtinger closed forms") {
  SUBCASE("ellipse derivatives are constant") {
    const double a = 0.4;
    for (ComplexPoint z : interior_samples(10, 0.99, 1)) {
      const WirtingerEval w = wirtinger_derivatives(Ellipse{a}, z);
      CHECK(w.dz.re == doctest::Approx(std::sqrt(a * a + 1)));
      CHECK(w.dz.im == 0.0);
      CHECK(w.dzbar.re == doctest::Approx(a));
    }
  }
  SUBCASE("epicycloid dz = A(1 + z^{n-1})") {
    const Epicycloid e{0.2, 0.05, 4};
    for (ComplexPoint z : interior_samples(10, 0.99, 2)) {
      const cplx zz = z.to_complex();
      const WirtingerEval w = wirtinger_derivatives(e, z);
      const cplx expect_dz = e.A * (1.0 + zz * zz * zz);
      const cplx expect_dzbar = e.B * (1.0 + std::conj(zz * zz * zz));
      CHECK(std::abs(w.dz.to_complex() - expect_dz) < 1e-15);
      CHECK(std::abs(w.dzbar.to_complex() - expect_dzbar) < 1e-15);
    }
  }
  SUBCASE("rose petal derivative moduli are 3a/4 and a/4") {
    const double a = 0.6;
    const WirtingerEval w0 = wirtinger_derivatives(RosePetal{a}, {0, 0});
    CHECK(w0.dz.abs() == doctest::Approx(0.75 * a).epsilon(1e-15));
    CHECK(w0.dzbar.abs() == doctest::Approx(0.25 * a).epsilon(1e-15));
    for (ComplexPoint z : interior_samples(50, 0.999, 3)) {
      const WirtingerEval w = wirtinger_derivatives(RosePetal{a}, z);
      CHECK(w.dz.abs() == doctest::Approx(0.75 * a).epsilon(1e-13));
      CHECK(w.dzbar.abs() == doctest::Approx(0.25 * a).epsilon(1e-13));
    }
  }
  SUBCASE("rose petal derivative is a domain error at z = -1") {
    CHECK_THROWS_AS(wirtinger_derivatives(RosePetal{0.5}, {-1.0, 0.0}), Error);
    try {
      jacobian(RosePetal{0.5}, {-1.0, 0.0});
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DomainError);
    }
  }
}

TEST_CASE("finite differences reconstruct the Wirtinger derivatives") {
  const double h = 1e-5;
  for (const MapFamily& f : families()) {
    double worst = 0.0;
    for (ComplexPoint z : interior_samples(100, 0.95, 42)) {
      const cplx fx = (eval(f, z.re + h, z.im) - eval(f, z.re - h, z.im)) / (2 * h);
      const cplx fy = (eval(f, z.re, z.im + h) - eval(f, z.re, z.im - h)) / (2 * h);
      const cplx dz = 0.5 * (fx - cplx{0, 1} * fy);
      const cplx dzbar = 0.5 * (fx + cplx{0, 1} * fy);
      const WirtingerEval w = wirtinger_derivatives(f, z);
      worst = std::max({worst, std::abs(dz - w.dz.to_complex()), std::abs(dzbar - w.dzbar.to_complex())});
    }
    INFO(family_name(f), " ", family_params(f));
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("jacobian examples") {
  for (ComplexPoint z : interior_samples(20, 0.99, 5)) {
    CHECK(jacobian(Ellipse{0.3}, z) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(jacobian(RosePetal{0.9}, z) == doctest::Approx(0.405).epsilon(1e-13));
    const Epicycloid e{0.2, 0.05, 3};
    const cplx zz = z.to_complex();
    CHECK(jacobian(e, z) == doctest::Approx((e.A * e.A - e.B * e.B) * std::norm(1.0 + zz * zz)).epsilon(1e-13));
  }
}

TEST_CASE("orientation: the Jacobian is positive inside the disc") {
  for (const MapFamily& f : families())
    for (ComplexPoint z : interior_samples(500, 0.999, 7)) CHECK(jacobian(f, z) > 0.0);
}

TEST_CASE("pointwise distortion") {
  CHECK(pointwise_distortion(Identity{}, {0.2, -0.1}) == 1.0);
  const double a = 0.125, s = std::sqrt(a * a + 1);
  CHECK(pointwise_distortion(Ellipse{a}, {0.5, 0.5}) == doctest::Approx((s + a) / (s - a)));
  for (ComplexPoint z : interior_samples(20, 0.99, 9))
    CHECK(pointwise_distortion(RosePetal{0.3}, z) == doctest::Approx(2.0).epsilon(1e-12));

  // epicycloid: bounded by the global K, attained where z^{n-1} is a positive real
  const Epicycloid e{0.2, 0.05, 3};
  const double k_global = (e.A + e.B) / (e.A - e.B);
  for (ComplexPoint z : interior_samples(200, 0.99, 11)) CHECK(pointwise_distortion(e, z) <= k_global + 1e-12);
  for (double r : {0.1, 0.5, 0.9})
    CHECK(pointwise_distortion(e, {r, 0.0}) == doctest::Approx(k_global).epsilon(1e-14));

  // |psi_z| = |psi_zbar| = 0 at the boundary cusp of the n = 2 epicycloid
  CHECK_THROWS_AS(pointwise_distortion(Epicycloid{0.3, 0.1, 2}, {-1.0, 0.0}), Error);
}

TEST_CASE("defining inequality |Dpsi|^2 <= K J holds pointwise") {
  for (const MapFamily& f : families()) {
    const double k = global_distortion(f);
    for (ComplexPoint z : interior_samples(200, 0.999, 13)) {
      const WirtingerEval w = wirtinger_derivatives(f, z);
      const double op = w.dz.abs() + w.dzbar.abs();
      CHECK(op * op <= k * jacobian(f, z) + 1e-12);
    }
  }
}

TEST_CASE("invalid parameters") {
  auto kind_of = [](const MapFamily& f) {
    try {
      validate(f);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  CHECK(kind_of(Ellipse{-0.1}) == ErrorKind::InvalidParameters);
  CHECK(kind_of(RosePetal{0.0}) == ErrorKind::InvalidParameters);
  CHECK(kind_of(RosePetal{1.0}) == ErrorKind::InvalidParameters);
  CHECK(kind_of(Epicycloid{0.2, 0.2, 3}) == ErrorKind::InvalidParameters);
  CHECK(kind_of(Epicycloid{0.2, 0.05, 1}) == ErrorKind::InvalidParameters);
  CHECK(kind_of(Epicycloid{0.2, -0.05, 3}) == ErrorKind::InvalidParameters);
  CHECK_NOTHROW(validate(Epicycloid{0.2, 0.0, 2}));
  CHECK_THROWS_AS(evaluate_map(Identity{}, {NAN, 0.0}), Error);
}

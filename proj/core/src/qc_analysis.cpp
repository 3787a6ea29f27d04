#include "qcspec/qc_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "qcspec/error.hpp"

namespace qcspec {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

constexpr double kPi = std::numbers::pi;
constexpr double kRadiusCap = 1.0 - 1e-9;

struct Vec2 {
  double x, y;
};

double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

class BoundaryPolyline {
 public:
  BoundaryPolyline(const MapFamily& family, int samples) {
    pts_.reserve(samples);
    for (int k = 0; k < samples; ++k) {
      const double t = 2.0 * kPi * k / samples;
      const ComplexPoint w = evaluate_map(family, {std::cos(t), std::sin(t)});
      pts_.push_back({w.re, w.im});
    }
  }

  double distance(Vec2 p) const {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = pts_.size();
    for (std::size_t k = 0; k < n; ++k)
      best = std::min(best, segment_distance(p, pts_[k], pts_[(k + 1) % n]));
    return best;
  }

 private:
  std::vector<Vec2> pts_;
};

double numeric_inradius(const MapFamily& family) {
  const BoundaryPolyline boundary(family, 4096);
  auto score = [&](double x, double y) {
    if (x * x + y * y >= kRadiusCap * kRadiusCap) return -1.0;
    const ComplexPoint w = evaluate_map(family, {x, y});
    return boundary.distance({w.re, w.im});
  };

  double bx = 0.0, by = 0.0, best = score(0.0, 0.0);
  constexpr int kRadial = 24, kAngular = 48;
  for (int i = 0; i < kRadial; ++i) {
    const double r = (i + 0.5) / kRadial;
    for (int j = 0; j < kAngular; ++j) {
      const double t = 2.0 * kPi * j / kAngular;
      const double x = r * std::cos(t), y = r * std::sin(t);
      const double s = score(x, y);
      if (s > best) best = s, bx = x, by = y;
    }
  }

  // Compass search on the preimage point.
  for (double step = 0.05; step > 1e-7;) {
    bool moved = false;
    for (auto [dx, dy] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}) {
      const double x = bx + step * dx, y = by + step * dy;
      const double s = score(x, y);
      if (s > best) {
        best = s, bx = x, by = y;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

}  // namespace

std::string_view to_string(SupMethod method) noexcept {
  return method == SupMethod::Analytic ? "analytic" : "grid";
}

void validate(const PolarGrid& grid) {
  if (grid.radial < PolarGrid::kMinResolution || grid.angular < PolarGrid::kMinResolution)
    throw Error(ErrorKind::InvalidGrid, "polar grid needs at least 64 radial and 64 angular nodes");
}

double global_distortion(const MapFamily& family) {
  validate(family);
  return std::visit(overloaded{
                        [](const Identity&) { return 1.0; },
                        [](const Ellipse& e) {
                          const double s = std::sqrt(e.a * e.a + 1.0);
                          return (s + e.a) / (s - e.a);
                        },
                        [](const RosePetal&) { return 2.0; },
                        [](const Epicycloid& e) { return (e.A + e.B) / (e.A - e.B); },
                    },
                    family);
}

double jacobian_sup_norm(const MapFamily& family, SupMethod method, std::optional<PolarGrid> grid) {
  validate(family);
  if (method == SupMethod::Analytic) {
    return std::visit(overloaded{
                          [](const Identity&) { return 1.0; },
                          [](const Ellipse&) { return 1.0; },
                          [](const RosePetal& r) { return 0.5 * r.a * r.a; },
                          [](const Epicycloid& e) { return 4.0 * (e.A * e.A - e.B * e.B); },
                      },
                      family);
  }
  if (!grid) throw Error(ErrorKind::InvalidGrid, "grid sup-norm requires a grid");
  validate(*grid);
  double best = 0.0;
  for (int i = 0; i < grid->radial; ++i) {
    const double r = (i + 0.5) / grid->radial * kRadiusCap;
    for (int j = 0; j < grid->angular; ++j) {
      const double t = 2.0 * kPi * j / grid->angular;
      best = std::max(best, jacobian(family, {r * std::cos(t), r * std::sin(t)}));
    }
  }
  return best;
}

double jacobian_beta_integral(const MapFamily& family, double beta, const PolarGrid& grid) {
  validate(family);
  validate(grid);
  if (!(beta >= 1.0)) throw Error(ErrorKind::InvalidInput, "beta must be >= 1");
  const double dr = 1.0 / grid.radial;
  const double dt = 2.0 * kPi / grid.angular;
  std::vector<double> cos_t(grid.angular), sin_t(grid.angular);
  for (int j = 0; j < grid.angular; ++j) {
    const double t = (j + 0.5) * dt;
    cos_t[j] = std::cos(t);
    sin_t[j] = std::sin(t);
  }
  double total = 0.0;
  for (int i = 0; i < grid.radial; ++i) {
    const double r = (i + 0.5) * dr;
    double ring = 0.0;
    for (int j = 0; j < grid.angular; ++j)
      ring += std::pow(std::abs(jacobian(family, {r * cos_t[j], r * sin_t[j]})), beta);
    total += ring * r;
  }
  return total * dr * dt;
}

double image_area(const MapFamily& family, const PolarGrid& grid) {
  return jacobian_beta_integral(family, 1.0, grid);
}

double analytic_image_area(const MapFamily& family) {
  validate(family);
  return std::visit(overloaded{
                        [](const Identity&) { return kPi; },
                        [](const Ellipse&) { return kPi; },
                        [](const RosePetal& r) { return 0.5 * kPi * r.a * r.a; },
                        // integral of |1 + z^{n-1}|^2 over the disc is pi (1 + 1/n)
                        [](const Epicycloid& e) {
                          return (e.A * e.A - e.B * e.B) * kPi * (1.0 + 1.0 / e.n);
                        },
                    },
                    family);
}

double max_boundary_modulus(const MapFamily& family, int samples) {
  validate(family);
  if (samples < 4) throw Error(ErrorKind::InvalidInput, "need at least 4 boundary samples");
  double best = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * kPi * k / samples;
    best = std::max(best, evaluate_map(family, {std::cos(t), std::sin(t)}).abs());
  }
  return best;
}

bool image_inside_unit_disc(const MapFamily& family, int samples) {
  return max_boundary_modulus(family, samples) <= 1.0 + 1e-12;
}

bool image_is_convex(const MapFamily& family) {
  validate(family);
  // The petal rho = 2a cos 2theta has positive curvature everywhere and a
  // right-angle corner at the origin; epicycloid cusps point inward.
  return !std::holds_alternative<Epicycloid>(family);
}

Inradius inradius(const MapFamily& family) {
  validate(family);
  if (std::holds_alternative<Identity>(family)) return {1.0, true};
  if (const auto* e = std::get_if<Ellipse>(&family))
    return {std::sqrt(e->a * e->a + 1.0) - e->a, true};
  return {numeric_inradius(family), false};
}

QcAnalysis analyze_family(const MapFamily& family, const PolarGrid& grid) {
  validate(family);
  validate(grid);
  QcAnalysis out;
  out.family = family;
  out.k_global = global_distortion(family);
  out.j_sup = jacobian_sup_norm(family, SupMethod::Analytic);
  out.j_sup_grid = jacobian_sup_norm(family, SupMethod::Grid, grid);
  out.j_sup_method = SupMethod::Analytic;
  out.image_area = image_area(family, grid);
  out.image_area_exact = analytic_image_area(family);
  out.grid = grid;
  return out;
}

}  // namespace qcspec

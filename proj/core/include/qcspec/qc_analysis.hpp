#pragma once

#include <optional>
#include <string_view>

#include "qcspec/maps.hpp"

namespace qcspec {

/// Polar sampling of the unit disc: `radial` x `angular` nodes.
struct PolarGrid {
  int radial = 512;
  int angular = 512;

  static constexpr int kMinResolution = 64;
};

enum class SupMethod { Analytic, Grid };

std::string_view to_string(SupMethod method) noexcept;

/// Throws InvalidGrid when either count is below PolarGrid::kMinResolution.
void validate(const PolarGrid& grid);

/// Analytic global distortion coefficient K of the family on the unit disc.
double global_distortion(const MapFamily& family);

/// Essential supremum of the Jacobian over the open disc.
///
/// The analytic path returns the closed form. The grid path returns the
/// maximum over nodes r_i = (i + 1/2)/m (1 - 1e-9), theta_j = 2 pi j / m_theta,
/// which is a lower estimate of the true supremum. A grid is required for the
/// grid path.
double jacobian_sup_norm(const MapFamily& family, SupMethod method,
                         std::optional<PolarGrid> grid = std::nullopt);

/// Midpoint-rule quadrature of |J|^beta r dr dtheta over the unit disc.
/// Summation runs over the radial index, then the angular index.
double jacobian_beta_integral(const MapFamily& family, double beta, const PolarGrid& grid);

/// Area of the image domain via the change-of-variables integral of J.
double image_area(const MapFamily& family, const PolarGrid& grid);

/// Closed-form area of the image domain.
double analytic_image_area(const MapFamily& family);

/// Maximum of |psi| over `samples` equally spaced points of the unit circle.
double max_boundary_modulus(const MapFamily& family, int samples = 8192);

/// Whether the image domain lies in the closed unit disc, judged from boundary
/// samples with slack 1e-12.
bool image_inside_unit_disc(const MapFamily& family, int samples = 8192);

/// Whether the image domain is convex. Known analytically for every family in scope.
bool image_is_convex(const MapFamily& family);

/// Radius of the largest disc inscribed in the image domain. Closed form for the
/// identity and the ellipse; numerical estimate (boundary polyline, coarse
/// search over mapped polar nodes, then local refinement) for the others.
struct Inradius {
  double value = 0.0;
  bool analytic = false;
};
Inradius inradius(const MapFamily& family);

struct QcAnalysis {
  MapFamily family;
  double k_global = 1.0;
  double j_sup = 1.0;  ///< analytic value
  double j_sup_grid = 1.0;
  SupMethod j_sup_method = SupMethod::Analytic;
  double image_area = 0.0;       ///< quadrature
  double image_area_exact = 0.0;  ///< closed form
  PolarGrid grid;
};

QcAnalysis analyze_family(const MapFamily& family, const PolarGrid& grid);

}  // namespace qcspec

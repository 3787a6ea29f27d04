#include "qcspec/bounds.hpp"

#include <cmath>
#include <numbers>

#include "qcspec/error.hpp"
#include "qcspec/special.hpp"

namespace qcspec {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, ErrorKind kind, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw Error(kind, std::string(what) + " must be positive and finite");
}

}  // namespace

double j01() {
  static const double value = bessel_j0_first_zero();
  return value;
}

double faber_krahn_bound(double area) {
  require_positive(area, ErrorKind::NonpositiveArea, "area");
  return j01() * j01() * kPi / area;
}

double makai_bound(double inradius) {
  require_positive(inradius, ErrorKind::NonpositiveInradius, "inradius");
  return 0.25 / (inradius * inradius);
}

double hersch_bound(double inradius) {
  require_positive(inradius, ErrorKind::NonpositiveInradius, "inradius");
  return kPi * kPi / (4.0 * inradius * inradius);
}

double qc_lower_bound(double lambda_ref, double k, double j_sup) {
  require_positive(lambda_ref, ErrorKind::InvalidInput, "lambda_ref");
  require_positive(j_sup, ErrorKind::InvalidInput, "j_sup");
  if (!(k >= 1.0) || !std::isfinite(k)) throw Error(ErrorKind::InvalidInput, "K must be finite and >= 1");
  return lambda_ref / (k * j_sup);
}

double growth_gap_bound(double lambda_ref, double k, double j_sup) {
  qc_lower_bound(lambda_ref, k, j_sup);  // argument checks
  const double q = k * j_sup;
  if (q >= 1.0) throw Error(ErrorKind::VacuousBound, "K * ||J||_inf >= 1: no positive gap");
  return (1.0 - q) / q * lambda_ref;
}

double sobolev_objective(double p, double r, double area) {
  const double log_value =
      (p - 1.0) / p * std::log((p - 1.0) / (2.0 - p)) + std::log(area) / r -
      0.5 * std::log(kPi) - std::log(2.0) / p -
      0.5 * (log_gamma(2.0 / p) + log_gamma(3.0 - 2.0 / p));
  return std::exp(log_value);
}

SobolevEstimate sobolev_constant_estimate(double r, double area) {
  if (!(r >= 2.0) || !std::isfinite(r)) throw Error(ErrorKind::InvalidR, "r must be >= 2");
  require_positive(area, ErrorKind::NonpositiveArea, "area");
  constexpr double eps = 1e-9;
  const double lo = 2.0 * r / (r + 2.0) + eps;
  const double hi = 2.0 - eps;
  const auto log_objective = [&](double p) { return std::log(sobolev_objective(p, r, area)); };
  const Minimum m = minimize_scalar(log_objective, lo, hi, 1e-12);
  return {std::exp(m.value), m.x, m.unimodal};
}

double sobolev_constant_upper(double r, double area) {
  return sobolev_constant_estimate(r, area).value;
}

double weighted_sobolev_constant(double r, double k, double area) {
  if (!(k >= 1.0) || !std::isfinite(k)) throw Error(ErrorKind::InvalidInput, "K must be finite and >= 1");
  return std::sqrt(k) * sobolev_constant_upper(r, area);
}

double a22_from_lambda(double lambda1) {
  require_positive(lambda1, ErrorKind::InvalidInput, "lambda1");
  return 1.0 / std::sqrt(lambda1);
}

EllipseComparison ellipse_vs_hersch(double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw Error(ErrorKind::InvalidParameters, "ellipse requires a >= 0");
  const double s = std::sqrt(a * a + 1.0);
  const double b = s - a;
  EllipseComparison c;
  c.a = a;
  c.qc = (s - a) / (s + a) * j01() * j01();
  c.hersch = hersch_bound(b);
  c.qc_wins = c.qc > c.hersch;
  return c;
}

double crossover_vs_hersch() {
  auto diff = [](double a) {
    const EllipseComparison c = ellipse_vs_hersch(a);
    return c.qc - c.hersch;
  };
  // qc - hersch is strictly decreasing in a; positive at 0, negative at 1.
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (diff(mid) > 0.0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

BoundReport bound_report(const MapFamily& family) {
  validate(family);
  BoundReport rep;
  rep.family = family;
  rep.lambda_ref = j01() * j01();
  rep.k_global = global_distortion(family);
  rep.j_sup = jacobian_sup_norm(family, SupMethod::Analytic);
  rep.k_times_j_sup = rep.k_global * rep.j_sup;
  rep.qc_lower = qc_lower_bound(rep.lambda_ref, rep.k_global, rep.j_sup);

  rep.max_boundary_modulus = max_boundary_modulus(family);
  rep.inclusion_certified = image_inside_unit_disc(family);
  if (rep.k_times_j_sup < 1.0) {
    rep.growth_gap = growth_gap_bound(rep.lambda_ref, rep.k_global, rep.j_sup);
    if (!rep.inclusion_certified)
      rep.growth_gap_note = "image not contained in the unit disc; gap still follows from qc_lower";
  } else {
    rep.growth_gap_note = "K*||J||_inf >= 1: bound is vacuous";
  }

  rep.faber_krahn = faber_krahn_bound(analytic_image_area(family));
  const Inradius rho = inradius(family);
  rep.inradius = rho.value;
  rep.inradius_analytic = rho.analytic;
  rep.makai = makai_bound(rho.value);
  if (image_is_convex(family)) rep.hersch = hersch_bound(rho.value);

  const SobolevEstimate sob = sobolev_constant_estimate(2.0, kPi);
  rep.sobolev_A22_upper = sob.value;
  rep.sobolev_p_opt = sob.p_opt;
  rep.weighted_sobolev_A22 = std::sqrt(rep.k_global) * sob.value;
  return rep;
}

}  // namespace qcspec

#pragma once

#include <optional>
#include <string>

#include "qcspec/maps.hpp"
#include "qcspec/qc_analysis.hpp"

namespace qcspec {

/// j_{0,1}, computed once and cached.
double j01();

/// Rayleigh-Faber-Krahn: lambda_1 >= j01^2 pi / area.
double faber_krahn_bound(double area);

/// lambda_1 >= (1/4) / rho^2 for simply connected domains with inradius rho.
double makai_bound(double inradius);

/// lambda_1 >= (pi^2/4) / rho^2. Only valid for convex domains; the caller certifies it.
double hersch_bound(double inradius);

/// lambda_1(image) >= lambda_ref / (K * j_sup).
double qc_lower_bound(double lambda_ref, double k, double j_sup);

/// lambda_1(image) - lambda_ref >= (1 - K j_sup) / (K j_sup) * lambda_ref.
/// Throws VacuousBound when K * j_sup >= 1.
double growth_gap_bound(double lambda_ref, double k, double j_sup);

/// The Sobolev-Poincare objective for exponent p in (2r/(r+2), 2):
///   ((p-1)/(2-p))^{(p-1)/p} |area|^{1/r} / (sqrt(pi) 2^{1/p} sqrt(Gamma(2/p) Gamma(3-2/p)))
double sobolev_objective(double p, double r, double area);

struct SobolevEstimate {
  double value = 0.0;
  double p_opt = 0.0;
  bool unimodal = true;
};

/// Upper estimate of A_{r,2} on a domain of the given area: infimum of the
/// objective over p, found by golden section on its logarithm.
SobolevEstimate sobolev_constant_estimate(double r, double area);
double sobolev_constant_upper(double r, double area);

/// K^{1/2} * sobolev_constant_upper(r, area).
double weighted_sobolev_constant(double r, double k, double area);

/// Exact A_{2,2} = 1/sqrt(lambda_1).
double a22_from_lambda(double lambda1);

struct EllipseComparison {
  double a = 0.0;
  double qc = 0.0;
  double hersch = 0.0;
  bool qc_wins = false;
};

/// Quasiconformal bound vs the Hersch bound for the ellipse image with parameter a.
EllipseComparison ellipse_vs_hersch(double a);

/// The unique a* > 0 where the two ellipse bounds coincide (bisection to 1e-12).
double crossover_vs_hersch();

struct BoundReport {
  MapFamily family;
  double lambda_ref = 0.0;
  double k_global = 1.0;
  double j_sup = 1.0;
  double k_times_j_sup = 1.0;
  double qc_lower = 0.0;
  std::optional<double> growth_gap;
  std::string growth_gap_note;  ///< reason when absent
  bool inclusion_certified = false;
  double max_boundary_modulus = 0.0;
  double faber_krahn = 0.0;
  double inradius = 0.0;
  bool inradius_analytic = false;
  std::optional<double> makai;
  std::optional<double> hersch;
  double sobolev_A22_upper = 0.0;
  double sobolev_p_opt = 0.0;
  double weighted_sobolev_A22 = 0.0;
};

/// All bounds for one family with the unit disc as reference domain.
BoundReport bound_report(const MapFamily& family);

}  // namespace qcspec

#pragma once

#include <functional>

namespace qcspec {

/// J0(x) from its ascending power series, summed until |term| < 1e-18.
/// Accurate to ~1e-15 absolute for |x| <= 10.
double bessel_j0(double x);

/// First positive zero of J0 by Newton iteration on the series from x = 2.4.
double bessel_j0_first_zero();

/// log Gamma(x) for x > 0 (Lanczos, g = 7, 9 terms; reflection below 1/2).
double log_gamma(double x);

struct Minimum {
  double x = 0.0;
  double value = 0.0;
  bool unimodal = true;  ///< pre-scan verdict
};

/// Golden-section minimization of f over [lo, hi] down to interval width `tol`.
/// A coarse pre-scan checks unimodality first; if it fails, the best scan node
/// is refined by golden section on its neighbouring cell instead.
Minimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                        double tol = 1e-12, int prescan_nodes = 257);

}  // namespace qcspec

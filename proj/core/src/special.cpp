#include "qcspec/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "qcspec/error.hpp"

namespace qcspec {

double bessel_j0(double x) {
  // J0(x) = sum_k (-1)^k (x^2/4)^k / (k!)^2
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= -q / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return sum;
}

namespace {

// J0'(x) = -J1(x) = -sum_k (-1)^k (x/2)^{2k+1} / (k! (k+1)!)
double bessel_j0_derivative(double x) {
  const double h = 0.5 * x;
  const double q = h * h;
  double term = h;
  double sum = h;
  for (int k = 1; k < 500; ++k) {
    term *= -q / (static_cast<double>(k) * (k + 1));
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return -sum;
}

}  // namespace

double bessel_j0_first_zero() {
  double x = 2.4;
  for (int it = 0; it < 50; ++it) {
    const double step = bessel_j0(x) / bessel_j0_derivative(x);
    x -= step;
    if (std::abs(step) < 1e-16 * x && std::abs(bessel_j0(x)) < 1e-14) break;
  }
  return x;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::InvalidInput, "log_gamma requires x > 0");
  static constexpr std::array<double, 9> kCoef = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double kPi = std::numbers::pi;
  if (x < 0.5) {
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double a = kCoef[0];
  const double t = z + 7.5;
  for (int i = 1; i < 9; ++i) a += kCoef[i] / (z + i);
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

namespace {

Minimum golden_section(const std::function<double(double)>& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c, fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d, fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    // Interval stops shrinking once it reaches rounding level.
    if (!(d > c)) break;
  }
  Minimum m;
  if (fc <= fd) m.x = c, m.value = fc;
  else m.x = d, m.value = fd;
  // The bracket endpoints are candidates too: golden section walks to an endpoint
  // for monotone objectives but never evaluates it.
  for (double e : {a, b}) {
    const double fe = f(e);
    if (fe < m.value) m.x = e, m.value = fe;
  }
  return m;
}

}  // namespace

Minimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi, double tol,
                        int prescan_nodes) {
  if (!(hi > lo)) throw Error(ErrorKind::InvalidRange, "minimize_scalar requires lo < hi");
  if (prescan_nodes < 3) prescan_nodes = 3;

  std::vector<double> xs(prescan_nodes), fs(prescan_nodes);
  std::size_t best = 0;
  for (int k = 0; k < prescan_nodes; ++k) {
    xs[k] = lo + (hi - lo) * k / (prescan_nodes - 1);
    fs[k] = f(xs[k]);
    if (fs[k] < fs[best]) best = k;
  }
  // Unimodal: non-increasing up to the best node, non-decreasing after it.
  bool unimodal = true;
  for (std::size_t k = 1; k <= best; ++k) unimodal = unimodal && fs[k] <= fs[k - 1];
  for (std::size_t k = best + 1; k < fs.size(); ++k) unimodal = unimodal && fs[k] >= fs[k - 1];

  Minimum m;
  if (unimodal) {
    m = golden_section(f, lo, hi, tol);
  } else {
    const std::size_t left = best == 0 ? 0 : best - 1;
    const std::size_t right = std::min(best + 1, xs.size() - 1);
    m = golden_section(f, xs[left], xs[right], tol);
  }
  if (fs[best] < m.value) m.x = xs[best], m.value = fs[best];
  m.unimodal = unimodal;
  return m;
}

}  // namespace qcspec

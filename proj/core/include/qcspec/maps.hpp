#pragma once

#include <complex>
#include <string>
#include <variant>

namespace qcspec {

/// A point of the plane, z = re + i*im.
struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;

  constexpr std::complex<double> to_complex() const { return {re, im}; }
  static constexpr ComplexPoint from(std::complex<double> c) {
    return {c.real(), c.imag()};
  }
  double abs() const { return std::abs(to_complex()); }
  bool finite() const;

  friend constexpr bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

// Map families. Each one is a homeomorphism of the closed unit disc onto the
// closure of its image domain.

struct Identity {};

/// z -> sqrt(a^2+1) z + a conj(z); image is an ellipse with semi-axes
/// sqrt(a^2+1) +- a.
struct Ellipse {
  double a = 0.0;
};

/// z -> a (z+1)^{3/4} (conj(z)+1)^{1/4}; image is the petal rho = 2a cos 2theta.
struct RosePetal {
  double a = 0.5;
};

/// z -> A (z + z^n/n) + B (conj(z) + conj(z)^n/n); boundary is an epicycloid
/// with n-1 cusps.
struct Epicycloid {
  double A = 0.2;
  double B = 0.05;
  int n = 3;
};

using MapFamily = std::variant<Identity, Ellipse, RosePetal, Epicycloid>;

/// Throws Error{InvalidParameters} when the family's parameter ranges are violated.
void validate(const MapFamily& family);

/// Stable family identifier: "identity", "ellipse", "rose-petal", "epicycloid".
std::string family_name(const MapFamily& family);

/// Short human-readable parameter list, e.g. "a=0.9" or "A=0.2,B=0.05,n=3".
std::string family_params(const MapFamily& family);

/// psi(z). RosePetal is extended by continuity to psi(-1) = 0.
ComplexPoint evaluate_map(const MapFamily& family, ComplexPoint z);

/// Value together with the Wirtinger derivatives psi_z and psi_zbar.
struct WirtingerEval {
  ComplexPoint value;
  ComplexPoint dz;
  ComplexPoint dzbar;
};

/// Closed-form Wirtinger derivatives. Throws DomainError at z = -1 for RosePetal.
WirtingerEval wirtinger_derivatives(const MapFamily& family, ComplexPoint z);

/// J = |psi_z|^2 - |psi_zbar|^2.
double jacobian(const MapFamily& family, ComplexPoint z);

/// K(z) = (|psi_z| + |psi_zbar|) / (|psi_z| - |psi_zbar|).
/// Throws DegenerateMap when |psi_z| - |psi_zbar| < 1e-14.
double pointwise_distortion(const MapFamily& family, ComplexPoint z);

}  // namespace qcspec

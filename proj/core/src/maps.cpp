#include "qcspec/maps.hpp"

#include <cmath>
#include <sstream>

#include "qcspec/error.hpp"

namespace qcspec {

namespace {

using cplx = std::complex<double>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

cplx ipow(cplx z, int n) {
  cplx result{1.0, 0.0};
  cplx base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

[[noreturn]] void invalid(const std::string& msg) {
  throw Error(ErrorKind::InvalidParameters, msg);
}

void require_finite(ComplexPoint z) {
  if (!z.finite()) throw Error(ErrorKind::InvalidInput, "point is not finite");
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParameters: return "invalid-parameters";
    case ErrorKind::DomainError: return "domain-error";
    case ErrorKind::DegenerateMap: return "degenerate-map";
    case ErrorKind::InvalidGrid: return "invalid-grid";
    case ErrorKind::NonpositiveArea: return "nonpositive-area";
    case ErrorKind::NonpositiveInradius: return "nonpositive-inradius";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::VacuousBound: return "vacuous-bound";
    case ErrorKind::InvalidR: return "invalid-r";
    case ErrorKind::InvalidRings: return "invalid-rings";
    case ErrorKind::InvalidDimensions: return "invalid-dimensions";
    case ErrorKind::DegenerateTriangle: return "degenerate-triangle";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::SingularSystem: return "singular-system";
    case ErrorKind::InvalidRange: return "invalid-range";
  }
  return "unknown";
}

bool ComplexPoint::finite() const { return std::isfinite(re) && std::isfinite(im); }

void validate(const MapFamily& family) {
  std::visit(overloaded{
                 [](const Identity&) {},
                 [](const Ellipse& e) {
                   if (!std::isfinite(e.a) || e.a < 0.0) invalid("ellipse requires a >= 0");
                 },
                 [](const RosePetal& r) {
                   if (!std::isfinite(r.a) || r.a <= 0.0 || r.a >= 1.0)
                     invalid("rose-petal requires 0 < a < 1");
                 },
                 [](const Epicycloid& e) {
                   if (!std::isfinite(e.A) || !std::isfinite(e.B))
                     invalid("epicycloid parameters must be finite");
                   if (e.n < 2) invalid("epicycloid requires n >= 2");
                   if (e.B < 0.0) invalid("epicycloid requires B >= 0");
                   if (!(e.A > e.B))
                     invalid("epicycloid requires A > B (K is infinite otherwise)");
                 },
             },
             family);
}

std::string family_name(const MapFamily& family) {
  return std::visit(overloaded{
                        [](const Identity&) { return std::string("identity"); },
                        [](const Ellipse&) { return std::string("ellipse"); },
                        [](const RosePetal&) { return std::string("rose-petal"); },
                        [](const Epicycloid&) { return std::string("epicycloid"); },
                    },
                    family);
}

std::string family_params(const MapFamily& family) {
  std::ostringstream os;
  os.precision(12);
  std::visit(overloaded{
                 [](const Identity&) {},
                 [&](const Ellipse& e) { os << "a=" << e.a; },
                 [&](const RosePetal& r) { os << "a=" << r.a; },
                 [&](const Epicycloid& e) { os << "A=" << e.A << ",B=" << e.B << ",n=" << e.n; },
             },
             family);
  return os.str();
}

ComplexPoint evaluate_map(const MapFamily& family, ComplexPoint zp) {
  validate(family);
  require_finite(zp);
  const cplx z = zp.to_complex();
  const cplx w = std::visit(
      overloaded{
          [&](const Identity&) { return z; },
          [&](const Ellipse& e) { return std::sqrt(e.a * e.a + 1.0) * z + e.a * std::conj(z); },
          [&](const RosePetal& r) {
            const cplx s = z + 1.0;
            if (s == cplx{0.0, 0.0}) return cplx{0.0, 0.0};
            return r.a * std::pow(s, 0.75) * std::pow(std::conj(s), 0.25);
          },
          [&](const Epicycloid& e) {
            const cplx u = z + ipow(z, e.n) / static_cast<double>(e.n);
            return e.A * u + e.B * std::conj(u);
          },
      },
      family);
  return ComplexPoint::from(w);
}

WirtingerEval wirtinger_derivatives(const MapFamily& family, ComplexPoint zp) {
  validate(family);
  require_finite(zp);
  const cplx z = zp.to_complex();
  WirtingerEval out;
  out.value = evaluate_map(family, zp);
  std::visit(overloaded{
                 [&](const Identity&) {
                   out.dz = {1.0, 0.0};
                   out.dzbar = {0.0, 0.0};
                 },
                 [&](const Ellipse& e) {
                   out.dz = {std::sqrt(e.a * e.a + 1.0), 0.0};
                   out.dzbar = {e.a, 0.0};
                 },
                 [&](const RosePetal& r) {
                   const cplx s = z + 1.0;
                   if (s == cplx{0.0, 0.0})
                     throw Error(ErrorKind::DomainError,
                                 "rose-petal derivatives are undefined at z = -1");
                   const cplx sb = std::conj(s);
                   out.dz = ComplexPoint::from(0.75 * r.a * std::pow(s, -0.25) * std::pow(sb, 0.25));
                   out.dzbar = ComplexPoint::from(0.25 * r.a * std::pow(s, 0.75) * std::pow(sb, -0.75));
                 },
                 [&](const Epicycloid& e) {
                   const cplx zn1 = ipow(z, e.n - 1);
                   out.dz = ComplexPoint::from(e.A * (1.0 + zn1));
                   out.dzbar = ComplexPoint::from(e.B * (1.0 + std::conj(zn1)));
                 },
             },
             family);
  return out;
}

double jacobian(const MapFamily& family, ComplexPoint z) {
  const WirtingerEval w = wirtinger_derivatives(family, z);
  return std::norm(w.dz.to_complex()) - std::norm(w.dzbar.to_complex());
}

double pointwise_distortion(const MapFamily& family, ComplexPoint z) {
  const WirtingerEval w = wirtinger_derivatives(family, z);
  const double p = w.dz.abs();
  const double q = w.dzbar.abs();
  if (p - q < 1e-14)
    throw Error(ErrorKind::DegenerateMap, "|psi_z| <= |psi_zbar|: map is not orientation-preserving here");
  return (p + q) / (p - q);
}

}  // namespace qcspec

#include "huygens/profiles.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "huygens/errors.hpp"

namespace huygens {

namespace {

double param(const std::map<std::string, double>& params, const std::string& key,
             double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ParameterError(std::string(what) + " must be positive and finite");
  }
}

void require_radius(double r) {
  if (!(r > 0.0)) {
    throw DomainError("radial wave evaluated at r <= 0 (source singularity)");
  }
}

}  // namespace

Shape::Shape(std::string name, Fn value, Fn derivative, std::vector<double> breakpoints,
             bool identically_zero)
    : name_(std::move(name)),
      value_(std::move(value)),
      derivative_(std::move(derivative)),
      breakpoints_(std::move(breakpoints)),
      zero_(identically_zero) {}

Shape Shape::zero() {
  return Shape("zero", [](double) { return 0.0; }, [](double) { return 0.0; }, {}, true);
}

Shape Shape::linear(double slope, double intercept) {
  return Shape(
      "linear", [=](double x) { return slope * x + intercept; },
      [=](double) { return slope; }, {}, slope == 0.0 && intercept == 0.0);
}

Shape Shape::gaussian(double center, double width, double amplitude) {
  require_positive(width, "gaussian width");
  const double inv_w2 = 1.0 / (width * width);
  Shape s(
      "gaussian",
      [=](double x) {
        const double d = x - center;
        return amplitude * std::exp(-0.5 * d * d * inv_w2);
      },
      [=](double x) {
        const double d = x - center;
        return -amplitude * d * inv_w2 * std::exp(-0.5 * d * d * inv_w2);
      },
      {}, amplitude == 0.0);
  // exp(-32) ~ 1e-14 at eight widths.
  s.support_ = {{center - 8.0 * width, center + 8.0 * width}};
  return s;
}

Shape Shape::raised_cosine(double center, double half_width, double amplitude) {
  require_positive(half_width, "raised cosine half width");
  const double kappa = std::numbers::pi / half_width;
  Shape s(
      "raised-cosine",
      [=](double x) {
        const double d = x - center;
        if (std::abs(d) >= half_width) return 0.0;
        return 0.5 * amplitude * (1.0 + std::cos(kappa * d));
      },
      [=](double x) {
        const double d = x - center;
        if (std::abs(d) >= half_width) return 0.0;
        return -0.5 * amplitude * kappa * std::sin(kappa * d);
      },
      {center - half_width, center + half_width}, amplitude == 0.0);
  s.support_ = {{center - half_width, center + half_width}};
  return s;
}

Shape Shape::triangle(double center, double half_width, double amplitude) {
  require_positive(half_width, "triangle half width");
  Shape s(
      "triangle",
      [=](double x) {
        const double d = std::abs(x - center);
        return d >= half_width ? 0.0 : amplitude * (1.0 - d / half_width);
      },
      // Corners are excluded from derivative test points; the one-sided
      // value chosen there does not matter for integration.
      [=](double x) {
        const double d = x - center;
        if (std::abs(d) >= half_width || d == 0.0) return 0.0;
        return d > 0.0 ? -amplitude / half_width : amplitude / half_width;
      },
      {center - half_width, center, center + half_width}, amplitude == 0.0);
  s.support_ = {{center - half_width, center + half_width}};
  return s;
}

Shape Shape::outgoing_sine(double amplitude, double wavenumber) {
  return Shape(
      "sine", [=](double s) { return amplitude * std::sin(-wavenumber * s); },
      [=](double s) { return -amplitude * wavenumber * std::cos(-wavenumber * s); }, {},
      amplitude == 0.0);
}

Shape make_shape(const std::string& family, const std::map<std::string, double>& params) {
  const double amplitude = param(params, "amplitude", 1.0);
  if (family == "zero") return Shape::zero();
  if (family == "linear") {
    return Shape::linear(param(params, "slope", 1.0), param(params, "intercept", 0.0));
  }
  if (family == "gaussian") {
    return Shape::gaussian(param(params, "center", 0.0), param(params, "width", 0.2),
                           amplitude);
  }
  if (family == "raised-cosine") {
    return Shape::raised_cosine(param(params, "center", 0.0),
                                param(params, "half_width", 0.5), amplitude);
  }
  if (family == "triangle") {
    return Shape::triangle(param(params, "center", 0.0), param(params, "half_width", 0.5),
                           amplitude);
  }
  if (family == "sine") {
    return Shape::outgoing_sine(amplitude, param(params, "wavenumber", 1.0));
  }
  throw ParameterError("unknown profile family '" + family + "'");
}

std::vector<std::string> shape_families() {
  return {"zero", "linear", "gaussian", "raised-cosine", "triangle", "sine"};
}

SphericalPulse::SphericalPulse(double amplitude, double omega, double c)
    : amplitude_(amplitude), omega_(omega), c_(c), k_(0.0) {
  if (!std::isfinite(amplitude)) throw ParameterError("pulse amplitude must be finite");
  require_positive(omega, "pulse angular frequency");
  require_positive(c, "wave speed");
  k_ = omega / c;
}

double eval_spherical_pulse(const SphericalPulse& pulse, double r, double t) {
  require_radius(r);
  return pulse.amplitude() * std::sin(pulse.omega() * t - pulse.k() * r) / r;
}

double eval_spherical_pulse_rate(const SphericalPulse& pulse, double r, double t) {
  require_radius(r);
  return pulse.amplitude() * pulse.omega() * std::cos(pulse.omega() * t - pulse.k() * r) / r;
}

double eval_generalized_radial(const RadialProfile& profile, double r, double t) {
  require_radius(r);
  return profile.f(r - profile.c * t) / r;
}

double eval_generalized_radial_rate(const RadialProfile& profile, double r, double t) {
  require_radius(r);
  return -profile.c * profile.f.derivative(r - profile.c * t) / r;
}

RadialProfile as_radial_profile(const SphericalPulse& pulse) {
  return RadialProfile{Shape::outgoing_sine(pulse.amplitude(), pulse.k()), pulse.c()};
}

}  // namespace huygens

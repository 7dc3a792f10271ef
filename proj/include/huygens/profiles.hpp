#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace huygens {

/// A scalar function of one real variable together with its exact derivative.
///
/// Breakpoints mark where the function or its derivative is not smooth
/// (support edges, corners); quadrature splits there.
class Shape {
 public:
  using Fn = std::function<double(double)>;

  Shape(std::string name, Fn value, Fn derivative,
        std::vector<double> breakpoints = {}, bool identically_zero = false);

  double operator()(double x) const { return value_(x); }
  double derivative(double x) const { return derivative_(x); }

  const std::string& name() const { return name_; }
  std::span<const double> breakpoints() const { return breakpoints_; }
  bool is_zero() const { return zero_; }
  /// Interval outside which the shape is zero (or negligible, for a Gaussian).
  std::optional<std::pair<double, double>> support() const { return support_; }

  static Shape zero();
  static Shape linear(double slope, double intercept = 0.0);
  /// amplitude * exp(-(x - center)^2 / (2 width^2))
  static Shape gaussian(double center, double width, double amplitude = 1.0);
  /// amplitude * (1 + cos(pi (x - center) / half_width)) / 2 on |x - center| < half_width.
  static Shape raised_cosine(double center, double half_width, double amplitude = 1.0);
  /// Hat function; corners at center and center +- half_width.
  static Shape triangle(double center, double half_width, double amplitude = 1.0);
  /// amplitude * sin(-wavenumber * s), the shape of a monochromatic outgoing wave.
  static Shape outgoing_sine(double amplitude, double wavenumber);

 private:
  std::string name_;
  Fn value_;
  Fn derivative_;
  std::vector<double> breakpoints_;
  bool zero_ = false;
  std::optional<std::pair<double, double>> support_;
};

/// Builds a shape from a family name and named parameters, e.g.
/// ("gaussian", {center: 0, width: 0.2}). Unknown names throw ParameterError.
Shape make_shape(const std::string& family, const std::map<std::string, double>& params);

/// Names accepted by make_shape.
std::vector<std::string> shape_families();

/// Initial data of the 1D problem: displacement phi and velocity psi.
struct WaveProfile1D {
  Shape phi;
  Shape psi = Shape::zero();

  double phi_prime(double x) const { return phi.derivative(x); }
};

/// Outgoing monochromatic spherical wave A sin(omega t - k r) / r.
class SphericalPulse {
 public:
  SphericalPulse(double amplitude, double omega, double c);

  double amplitude() const { return amplitude_; }
  double omega() const { return omega_; }
  double c() const { return c_; }
  double k() const { return k_; }

 private:
  double amplitude_;
  double omega_;
  double c_;
  double k_;
};

/// Radial wave f(r - c t) / r with an arbitrary shape f.
struct RadialProfile {
  Shape f;
  double c = 1.0;
};

double eval_spherical_pulse(const SphericalPulse& pulse, double r, double t);
/// Exact time derivative of eval_spherical_pulse.
double eval_spherical_pulse_rate(const SphericalPulse& pulse, double r, double t);

double eval_generalized_radial(const RadialProfile& profile, double r, double t);
/// -c f'(r - c t) / r
double eval_generalized_radial_rate(const RadialProfile& profile, double r, double t);

/// The generalized profile that reproduces the pulse: f(s) = A sin(-k s).
RadialProfile as_radial_profile(const SphericalPulse& pulse);

}  // namespace huygens

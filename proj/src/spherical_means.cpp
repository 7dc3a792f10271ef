#include "huygens/spherical_means.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "huygens/errors.hpp"
#include "huygens/quadrature1d.hpp"

namespace huygens {

namespace {

std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// S[g](tau) = rho * (integral of g over the unit-sphere directions), rho = c tau.
double sphere_mean_integral(const SpatialField& field, double c, const Eigen::Vector3d& P,
                            double tau, const SphereQuadratureRule& rule,
                            std::optional<double> lit_radius) {
  const double rho = c * tau;
  const double R = P.norm();
  const Eigen::Vector3d axis = -P;  // toward the source

  if (!lit_radius || R == 0.0) {
    return integrate_on_sphere(rule, P, rho, axis, field) / rho;
  }
  // |Q|^2 = R^2 + rho^2 - 2 R rho mu, with mu the cosine from the P -> P0 axis.
  const double L = *lit_radius;
  const double mu_front = (R * R + rho * rho - L * L) / (2.0 * R * rho);
  if (mu_front >= 1.0) return 0.0;
  if (mu_front <= -1.0) return integrate_on_sphere(rule, P, rho, axis, field) / rho;
  const SphereQuadratureRule cap = build_band_rule(rule.family, rule.resolution, mu_front, 1.0);
  return integrate_on_sphere(cap, P, rho, axis, field) / rho;
}

double five_point(const std::function<double(double)>& F, double x, double h) {
  return (-F(x + 2.0 * h) + 8.0 * F(x + h) - 8.0 * F(x - h) + F(x - 2.0 * h)) / (12.0 * h);
}

}  // namespace

const char* to_string(SupportCase c) { return c == SupportCase::CaseI ? "CaseI" : "CaseII"; }

IntegrationBounds integration_bounds(double R, double c_tau, double c_t1) {
  if (!(c_tau > 0.0)) throw DomainError("c*tau > 0 violated (c*tau = " + fmt_num(c_tau) + ")");
  if (!(c_tau < R)) {
    throw DomainError("c*tau < R violated: the sampling sphere would reach the source (R = " +
                      fmt_num(R) + ", c*tau = " + fmt_num(c_tau) + ")");
  }
  if (!(c_t1 > 0.0)) throw DomainError("c*t1 > 0 violated (c*t1 = " + fmt_num(c_t1) + ")");
  if (!(R - c_tau < c_t1)) {
    throw DomainError("R - c*tau < c*t1 violated: the sampling sphere misses the lit ball");
  }
  IntegrationBounds b;
  b.gamma = std::max(0.0, R + c_tau - c_t1);
  b.case_tag = b.gamma > 0.0 ? SupportCase::CaseII : SupportCase::CaseI;
  b.r_lo = R - c_tau;
  b.r_hi = b.case_tag == SupportCase::CaseII ? c_t1 : R + c_tau;
  return b;
}

double ring_area_density(double rho, double R, double r) {
  if (!(rho > 0.0 && R > 0.0)) throw DomainError("ring_area_density needs rho > 0 and R > 0");
  if (r < std::abs(R - rho) || r > R + rho) {
    throw DomainError("r = " + fmt_num(r) + " outside [|R - rho|, R + rho]");
  }
  return 2.0 * std::numbers::pi * rho * r / R;
}

double poisson_eval_surface(const SpatialField& value_field, const SpatialField& rate_field,
                            double c, const Eigen::Vector3d& P, double tau,
                            const SphereQuadratureRule& rule, double h,
                            std::optional<double> lit_radius) {
  if (!(c > 0.0)) throw ParameterError("wave speed c must be positive");
  if (!(tau > 0.0)) throw ParameterError("tau must be positive");
  if (!(h > 0.0) || !(2.0 * h < tau)) {
    throw ParameterError("derivative step must satisfy 0 < 2h < tau (h = " + fmt_num(h) +
                         ", tau = " + fmt_num(tau) + ")");
  }
  auto S_value = [&](double s) {
    return sphere_mean_integral(value_field, c, P, s, rule, lit_radius);
  };
  const double coarse = five_point(S_value, tau, h);
  const double fine = five_point(S_value, tau, 0.5 * h);
  const double dS = (16.0 * fine - coarse) / 15.0;
  const double S_rate = sphere_mean_integral(rate_field, c, P, tau, rule, lit_radius);
  return (dS + S_rate) / (4.0 * std::numbers::pi * c);
}

SpatialField pulse_value_field(const SphericalPulse& pulse, double t1) {
  const double front = pulse.c() * t1;
  return [pulse, t1, front](const Eigen::Vector3d& q) {
    const double r = q.norm();
    return r > front ? 0.0 : eval_spherical_pulse(pulse, r, t1);
  };
}

SpatialField pulse_rate_field(const SphericalPulse& pulse, double t1) {
  const double front = pulse.c() * t1;
  return [pulse, t1, front](const Eigen::Vector3d& q) {
    const double r = q.norm();
    return r > front ? 0.0 : eval_spherical_pulse_rate(pulse, r, t1);
  };
}

SpatialField radial_value_field(const RadialProfile& profile, double t1) {
  const double front = profile.c * t1;
  return [profile, t1, front](const Eigen::Vector3d& q) {
    const double r = q.norm();
    return r > front ? 0.0 : eval_generalized_radial(profile, r, t1);
  };
}

SpatialField radial_rate_field(const RadialProfile& profile, double t1) {
  const double front = profile.c * t1;
  return [profile, t1, front](const Eigen::Vector3d& q) {
    const double r = q.norm();
    return r > front ? 0.0 : eval_generalized_radial_rate(profile, r, t1);
  };
}

RingReducedResult ring_reduced_eval(const SphericalPulse& pulse, double R, double t1,
                                    double tau) {
  const double c = pulse.c();
  RingReducedResult out;
  out.bounds = integration_bounds(R, c * tau, c * t1);

  // r * f(r, t1) = A sin(omega t1 - k r); its r-integral of omega cos(...) is -c sin(...).
  const double half = pulse.amplitude() / (2.0 * R);
  const double phase = pulse.omega() * t1;
  const double s_hi = std::sin(phase - pulse.k() * out.bounds.r_hi);
  const double s_lo = std::sin(phase - pulse.k() * out.bounds.r_lo);

  out.derivative_upper = out.bounds.case_tag == SupportCase::CaseI ? half * s_hi : 0.0;
  out.derivative_lower = half * s_lo;
  out.rate_upper = -half * s_hi;
  out.rate_lower = half * s_lo;
  out.value = out.derivative_upper + out.derivative_lower + out.rate_upper + out.rate_lower;
  return out;
}

GeneralizedRingResult ring_reduced_eval_generalized(const RadialProfile& profile, double R,
                                                    double t1, double tau) {
  if (!(profile.c > 0.0)) throw ParameterError("wave speed c must be positive");
  const double c = profile.c;
  const double ct1 = c * t1;
  GeneralizedRingResult out;
  out.bounds = integration_bounds(R, c * tau, ct1);

  const Shape& f = profile.f;
  const double scale = 1.0 / (2.0 * c * R);
  // r * u(r, t1) = f(r - c t1); the endpoints move at +-c in tau.
  if (out.bounds.case_tag == SupportCase::CaseI) {
    out.derivative_upper = scale * c * f(out.bounds.r_hi - ct1);
  }
  out.derivative_lower = scale * c * f(out.bounds.r_lo - ct1);

  std::vector<double> cuts;
  for (double p : f.breakpoints()) cuts.push_back(p + ct1);
  const double integral = integrate_adaptive(
      [&f, c, ct1](double r) { return -c * f.derivative(r - ct1); }, out.bounds.r_lo,
      out.bounds.r_hi, cuts, {1e-12});
  out.rate_integral = scale * integral;
  out.value = out.derivative_upper + out.derivative_lower + out.rate_integral;
  return out;
}

double closed_form_target(const SphericalPulse& pulse, double R, double t2) {
  if (!(R > 0.0)) throw DomainError("closed form needs R > 0");
  return pulse.amplitude() / R * std::sin(pulse.omega() * t2 - pulse.k() * R);
}

BackwaveTerms3D backwave_terms_3d(const SphericalPulse& pulse, double R, double t1, double t2,
                                  double gamma) {
  if (!(R > 0.0)) throw DomainError("backwave terms need R > 0");
  if (!(t1 > 0.0 && t2 > t1)) throw ParameterError("backwave terms need 0 < t1 < t2");
  const double c_tau = pulse.c() * (t2 - t1);
  if (!(gamma >= 0.0 && (gamma == 0.0 || gamma < 2.0 * c_tau))) {
    throw ParameterError("gamma must be 0 (Case I) or in (0, 2 c tau) (Case II)");
  }
  const double w = pulse.omega();
  const double k = pulse.k();
  const double half = pulse.amplitude() / (2.0 * R);

  BackwaveTerms3D out;
  const double forward = half * std::sin(w * t2 - k * R);
  out.forward_pair = {forward, forward};
  const double back = half * std::sin(2.0 * w * t1 - w * t2 - k * R + k * gamma);
  out.backward_pair = {back, -back};
  out.rewritten_back = -half * std::sin(k * (R + pulse.c() * (t2 - 2.0 * t1)));
  out.rewrite_residual =
      std::abs(out.rewritten_back - half * std::sin(2.0 * w * t1 - w * t2 - k * R));
  return out;
}

}  // namespace huygens

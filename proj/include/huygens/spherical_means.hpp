#pragma once

#include <array>
#include <functional>
#include <optional>

#include <Eigen/Core>

#include "huygens/profiles.hpp"
#include "huygens/sphere_rule.hpp"

namespace huygens {

// Geometry: the source P0 sits at the origin, the observation point P at
// distance R from it, and the data live in the lit ball |Q| <= c t1.

enum class SupportCase { CaseI, CaseII };

const char* to_string(SupportCase c);

/// Radial range [r_lo, r_hi] swept by the sphere of radius c tau around P,
/// clipped to the lit ball. gamma is the overshoot R + c tau - c t1 (0 in Case I).
struct IntegrationBounds {
  double r_lo = 0.0;
  double r_hi = 0.0;
  SupportCase case_tag = SupportCase::CaseI;
  double gamma = 0.0;
};

/// Requires 0 < c_tau < R, c_t1 > 0 and R - c_tau < c_t1; DomainError otherwise.
IntegrationBounds integration_bounds(double R, double c_tau, double c_t1);

/// ds/dr = 2 pi rho r / R for the ring cut from the sphere of radius rho around P
/// by spheres of radius r and r + dr around the source.
double ring_area_density(double rho, double R, double r);

using SpatialField = std::function<double(const Eigen::Vector3d&)>;

/// Poisson's formula by direct surface quadrature:
///   u(P, tau) = 1/(4 pi c) [ d/dtau  S[value](tau) + S[rate](tau) ],
///   S[g](tau) = (1/rho) * integral of g over |Q - P| = rho,  rho = c tau.
/// d/dtau is a 5-point centered stencil at steps h and h/2 combined by
/// Richardson extrapolation. The rule's polar axis is aligned with P -> P0.
///
/// When `lit_radius` is given the fields are taken to vanish for |Q| > lit_radius
/// and only the lit cap of each sphere is integrated, so the kink at the front
/// does not cost accuracy.
double poisson_eval_surface(const SpatialField& value_field, const SpatialField& rate_field,
                            double c, const Eigen::Vector3d& P, double tau,
                            const SphereQuadratureRule& rule, double h,
                            std::optional<double> lit_radius = std::nullopt);

/// Initial data of the re-seeded 3D problem: the pulse at t1 inside the lit
/// ball, zero outside.
SpatialField pulse_value_field(const SphericalPulse& pulse, double t1);
SpatialField pulse_rate_field(const SphericalPulse& pulse, double t1);
SpatialField radial_value_field(const RadialProfile& profile, double t1);
SpatialField radial_rate_field(const RadialProfile& profile, double t1);

/// Ring-reduced Poisson formula for the pulse, the four sine terms kept apart:
///   derivative_upper/lower: Leibniz boundary terms of d/dtau of the value integral
///   rate_upper/lower:       endpoint values of the rate integral
/// The upper radius is fixed at c t1 in Case II, so derivative_upper is 0 there.
struct RingReducedResult {
  IntegrationBounds bounds;
  double derivative_upper = 0.0;
  double derivative_lower = 0.0;
  double rate_upper = 0.0;
  double rate_lower = 0.0;
  double value = 0.0;

  std::array<double, 4> terms() const {
    return {derivative_upper, derivative_lower, rate_upper, rate_lower};
  }
};

RingReducedResult ring_reduced_eval(const SphericalPulse& pulse, double R, double t1,
                                    double tau);

/// Same reduction for initial data f(r - c t1)/r and -c f'(r - c t1)/r. The
/// rate integral is done by adaptive quadrature on f'.
struct GeneralizedRingResult {
  IntegrationBounds bounds;
  double derivative_upper = 0.0;
  double derivative_lower = 0.0;
  double rate_integral = 0.0;
  double value = 0.0;
};

GeneralizedRingResult ring_reduced_eval_generalized(const RadialProfile& profile, double R,
                                                    double t1, double tau);

/// (A/R) sin(omega t2 - k R): the pulse allowed to run straight to P.
double closed_form_target(const SphericalPulse& pulse, double R, double t2);

struct BackwaveTerms3D {
  std::array<double, 2> forward_pair{};
  std::array<double, 2> backward_pair{};
  /// -(A/2R) sin k[R + c(t2 - 2 t1)], the back term written as a wave moving toward P0.
  double rewritten_back = 0.0;
  /// |rewritten_back - backward_pair[0]| evaluated at gamma = 0.
  double rewrite_residual = 0.0;

  double forward_sum() const { return forward_pair[0] + forward_pair[1]; }
  double backward_sum() const { return backward_pair[0] + backward_pair[1]; }
};

BackwaveTerms3D backwave_terms_3d(const SphericalPulse& pulse, double R, double t1, double t2,
                                  double gamma);

}  // namespace huygens

#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace huygens {

/// Quadrature on the unit sphere (or a polar band of it) in a canonical frame
/// whose polar axis is +z. Weights are in steradians.
struct SphereQuadratureRule {
  std::string family;
  int resolution = 0;
  int order = 0;  // spherical-harmonic degree integrated exactly (full sphere)
  double mu_lo = -1.0;
  double mu_hi = 1.0;
  std::vector<Eigen::Vector3d> nodes;
  std::vector<double> weights;

  double total_weight() const;
};

/// Supported rule families. "gauss-product": Gauss-Legendre in the polar
/// cosine times a uniform trapezoid in azimuth, `resolution` polar nodes and
/// 2*resolution azimuthal nodes, exact to degree 2*resolution - 1.
std::vector<std::string> sphere_rule_families();

SphereQuadratureRule build_sphere_rule(std::string_view kind, int resolution);

/// Like build_sphere_rule but throws ParameterError when the rule's exactness
/// degree is below `min_order`.
SphereQuadratureRule build_sphere_rule(std::string_view kind, int resolution, int min_order);

/// Rule restricted to the band mu_lo <= cos(polar angle) <= mu_hi.
SphereQuadratureRule build_band_rule(std::string_view kind, int resolution, double mu_lo,
                                     double mu_hi);

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Surface integral of `field` over the sphere |Q - center| = radius, with
/// the rule's polar axis mapped to `axis` (need not be normalized).
double integrate_on_sphere(const SphereQuadratureRule& rule, const Eigen::Vector3d& center,
                           double radius, const Eigen::Vector3d& axis,
                           const std::function<double(const Eigen::Vector3d&)>& field);

}  // namespace huygens

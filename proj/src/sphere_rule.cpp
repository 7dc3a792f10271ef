#include "huygens/sphere_rule.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Geometry>
#include <boost/math/special_functions/legendre.hpp>

#include "huygens/errors.hpp"

namespace huygens {

namespace {

constexpr std::string_view kGaussProduct = "gauss-product";

void check_kind(std::string_view kind, int resolution) {
  if (kind != kGaussProduct) {
    throw ParameterError("unknown sphere rule family '" + std::string(kind) + "'");
  }
  if (resolution < 2) throw ParameterError("sphere rule resolution must be at least 2");
}

}  // namespace

double SphereQuadratureRule::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

std::vector<std::string> sphere_rule_families() { return {std::string(kGaussProduct)}; }

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  // legendre_p_zeros returns the non-negative roots, ascending.
  const std::vector<double> half = boost::math::legendre_p_zeros<double>(n);
  nodes.clear();
  weights.clear();
  auto weight = [n](double x) {
    const double dp = boost::math::legendre_p_prime<double>(n, x);
    return 2.0 / ((1.0 - x * x) * dp * dp);
  };
  for (auto it = half.rbegin(); it != half.rend(); ++it) {
    if (*it == 0.0) continue;
    nodes.push_back(-*it);
    weights.push_back(weight(*it));
  }
  for (double x : half) {
    nodes.push_back(x);
    weights.push_back(weight(x));
  }
}

SphereQuadratureRule build_band_rule(std::string_view kind, int resolution, double mu_lo,
                                     double mu_hi) {
  check_kind(kind, resolution);
  if (!(mu_lo >= -1.0 && mu_hi <= 1.0 && mu_lo < mu_hi)) {
    throw ParameterError("band limits must satisfy -1 <= mu_lo < mu_hi <= 1");
  }
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(resolution, x, w);

  SphereQuadratureRule rule;
  rule.family = std::string(kind);
  rule.resolution = resolution;
  rule.order = 2 * resolution - 1;
  rule.mu_lo = mu_lo;
  rule.mu_hi = mu_hi;

  const int n_phi = 2 * resolution;
  const double half_len = 0.5 * (mu_hi - mu_lo);
  const double mid = 0.5 * (mu_hi + mu_lo);
  const double d_phi = 2.0 * std::numbers::pi / n_phi;
  rule.nodes.reserve(static_cast<std::size_t>(resolution * n_phi));
  rule.weights.reserve(rule.nodes.capacity());
  for (int i = 0; i < resolution; ++i) {
    const double mu = mid + half_len * x[static_cast<std::size_t>(i)];
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    const double wi = half_len * w[static_cast<std::size_t>(i)] * d_phi;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = (j + 0.5) * d_phi;
      rule.nodes.emplace_back(sin_theta * std::cos(phi), sin_theta * std::sin(phi), mu);
      rule.weights.push_back(wi);
    }
  }
  return rule;
}

SphereQuadratureRule build_sphere_rule(std::string_view kind, int resolution) {
  return build_band_rule(kind, resolution, -1.0, 1.0);
}

SphereQuadratureRule build_sphere_rule(std::string_view kind, int resolution, int min_order) {
  SphereQuadratureRule rule = build_sphere_rule(kind, resolution);
  if (rule.order < min_order) {
    throw ParameterError("sphere rule of resolution " + std::to_string(resolution) +
                         " is exact only to degree " + std::to_string(rule.order) +
                         ", requested " + std::to_string(min_order));
  }
  return rule;
}

double integrate_on_sphere(const SphereQuadratureRule& rule, const Eigen::Vector3d& center,
                           double radius, const Eigen::Vector3d& axis,
                           const std::function<double(const Eigen::Vector3d&)>& field) {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  if (axis.norm() > 0.0) {
    rotation = Eigen::Quaterniond::FromTwoVectors(Eigen::Vector3d::UnitZ(), axis.normalized())
                   .toRotationMatrix();
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * field(center + radius * (rotation * rule.nodes[i]));
  }
  return sum * radius * radius;
}

}  // namespace huygens

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "huygens/errors.hpp"
#include "huygens/sphere_rule.hpp"

namespace huygens {
namespace {

constexpr double kPi = std::numbers::pi;

double integrate_unit(const SphereQuadratureRule& rule,
                      const std::function<double(const Eigen::Vector3d&)>& f) {
  return integrate_on_sphere(rule, Eigen::Vector3d::Zero(), 1.0, Eigen::Vector3d::UnitZ(), f);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  std::vector<double> x;
  std::vector<double> w;
  for (int n : {1, 2, 5, 8, 33}) {
    gauss_legendre(n, x, w);
    ASSERT_EQ(static_cast<int>(x.size()), n);
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], deg);
      const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
      EXPECT_NEAR(s, exact, 1e-14) << "n=" << n << " deg=" << deg;
    }
  }
}

TEST(SphereRule, WeightsSumToFullSolidAngle) {
  for (int res : {2, 3, 8, 16, 40}) {
    const SphereQuadratureRule rule = build_sphere_rule("gauss-product", res);
    EXPECT_NEAR(rule.total_weight(), 4.0 * kPi, 1e-12);
    EXPECT_EQ(rule.order, 2 * res - 1);
    for (double w : rule.weights) EXPECT_GT(w, 0.0);
    for (const auto& n : rule.nodes) EXPECT_NEAR(n.norm(), 1.0, 1e-15);
  }
}

TEST(SphereRule, ConstantOverSphereOfRadiusTwo) {
  const SphereQuadratureRule rule = build_sphere_rule("gauss-product", 4);
  const double area = integrate_on_sphere(rule, Eigen::Vector3d(1.0, -2.0, 0.5), 2.0,
                                          Eigen::Vector3d(0.3, 0.4, -1.0),
                                          [](const Eigen::Vector3d&) { return 1.0; });
  EXPECT_NEAR(area, 16.0 * kPi, 1e-12);
}

TEST(SphereRule, OddFieldIntegratesToZero) {
  const SphereQuadratureRule rule = build_sphere_rule("gauss-product", 5);
  EXPECT_NEAR(integrate_unit(rule, [](const Eigen::Vector3d& q) { return q.z(); }), 0.0, 1e-15);
  EXPECT_NEAR(integrate_unit(rule, [](const Eigen::Vector3d& q) { return q.x() * q.y() * q.y(); }),
              0.0, 1e-15);
}

TEST(SphereRule, LowDegreeMonomials) {
  const SphereQuadratureRule rule = build_sphere_rule("gauss-product", 4);  // degree 7
  auto x2 = [](const Eigen::Vector3d& q) { return q.x() * q.x(); };
  auto z4 = [](const Eigen::Vector3d& q) { return std::pow(q.z(), 4); };
  auto x2y2z2 = [](const Eigen::Vector3d& q) {
    return q.x() * q.x() * q.y() * q.y() * q.z() * q.z();
  };
  EXPECT_NEAR(integrate_unit(rule, x2), 4.0 * kPi / 3.0, 1e-13);
  EXPECT_NEAR(integrate_unit(rule, z4), 4.0 * kPi / 5.0, 1e-13);
  EXPECT_NEAR(integrate_unit(rule, x2y2z2), 4.0 * kPi / 105.0, 1e-14);
}

TEST(SphereRule, RotationDoesNotChangeIsotropicIntegrals) {
  const SphereQuadratureRule rule = build_sphere_rule("gauss-product", 6);
  auto r2 = [](const Eigen::Vector3d& q) { return q.squaredNorm(); };
  const Eigen::Vector3d c(0.5, 0.1, -0.3);
  const double a = integrate_on_sphere(rule, c, 1.5, Eigen::Vector3d::UnitZ(), r2);
  const double b = integrate_on_sphere(rule, c, 1.5, Eigen::Vector3d(1.0, 2.0, 3.0), r2);
  // |Q|^2 on a sphere is degree 2 in the direction, so both are exact.
  const double exact = 4.0 * kPi * 1.5 * 1.5 * (c.squaredNorm() + 1.5 * 1.5);
  EXPECT_NEAR(a, exact, 1e-12);
  EXPECT_NEAR(b, exact, 1e-12);
}

TEST(SphereRule, GaussianSelfConvergence) {
  auto f = [](const Eigen::Vector3d& q) {
    return std::exp(-(q - Eigen::Vector3d(0.3, -0.2, 0.5)).squaredNorm());
  };
  const Eigen::Vector3d axis(0.2, 0.7, -0.1);
  auto at = [&](int res) {
    return integrate_on_sphere(build_sphere_rule("gauss-product", res), Eigen::Vector3d::Zero(),
                               1.0, axis, f);
  };
  const double reference = at(128);
  double previous = INFINITY;
  for (int res = 2; res <= 64; res *= 2) {
    const double err = std::abs(at(res) - reference);
    EXPECT_LE(err, std::max(previous, 1e-13)) << "res=" << res;
    previous = err;
  }
  EXPECT_LE(previous, 1e-12);
}

TEST(SphereRule, BandRuleCoversTheRequestedCap) {
  const SphereQuadratureRule band = build_band_rule("gauss-product", 6, 0.25, 1.0);
  EXPECT_NEAR(band.total_weight(), 2.0 * kPi * 0.75, 1e-13);
  for (const auto& n : band.nodes) EXPECT_GE(n.z(), 0.25);
}

TEST(SphereRule, Errors) {
  EXPECT_THROW(build_sphere_rule("lebedev", 8), ParameterError);
  EXPECT_THROW(build_sphere_rule("gauss-product", 1), ParameterError);
  EXPECT_THROW(build_sphere_rule("gauss-product", 8, 30), ParameterError);
  EXPECT_NO_THROW(build_sphere_rule("gauss-product", 16, 30));
  EXPECT_THROW(build_band_rule("gauss-product", 4, 0.5, 0.2), ParameterError);
}

}  // namespace
}  // namespace huygens

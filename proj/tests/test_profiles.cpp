#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "huygens/errors.hpp"
#include "huygens/fdtd.hpp"
#include "huygens/profiles.hpp"
#include "test_support.hpp"

namespace huygens {
namespace {

TEST(SphericalPulse, WavenumberIsOmegaOverC) {
  const SphericalPulse p(1.3, 2.5, 0.8);
  EXPECT_DOUBLE_EQ(p.k(), 2.5 / 0.8);
}

TEST(SphericalPulse, RejectsNonPhysicalParameters) {
  EXPECT_THROW(SphericalPulse(1.0, 0.0, 1.0), ParameterError);
  EXPECT_THROW(SphericalPulse(1.0, 1.0, -1.0), ParameterError);
  EXPECT_THROW(SphericalPulse(INFINITY, 1.0, 1.0), ParameterError);
}

TEST(SphericalPulse, ZeroPhase) {
  const SphericalPulse p(1.0, 1.0, 1.0);
  EXPECT_EQ(eval_spherical_pulse(p, 2.0, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(eval_spherical_pulse_rate(p, 2.0, 2.0), 0.5);
}

TEST(SphericalPulse, ValuesAtTheObservationPoint) {
  const SphericalPulse p(1.0, 1.0, 1.0);
  EXPECT_NEAR(eval_spherical_pulse(p, 2.0, 3.5), 0.4987475, 5e-8);
  EXPECT_NEAR(eval_spherical_pulse_rate(p, 2.0, 3.5), 0.0353686, 5e-8);
}

TEST(SphericalPulse, SourcePointIsAnError) {
  const SphericalPulse p(1.0, 1.0, 1.0);
  EXPECT_THROW(eval_spherical_pulse(p, 0.0, 1.0), DomainError);
  EXPECT_THROW(eval_spherical_pulse(p, -1.0, 1.0), DomainError);
  EXPECT_THROW(eval_spherical_pulse_rate(p, 0.0, 1.0), DomainError);
  const RadialProfile g{Shape::gaussian(0.0, 1.0), 1.0};
  EXPECT_THROW(eval_generalized_radial(g, 0.0, 1.0), DomainError);
}

TEST(SphericalPulse, RateMatchesFiniteDifference) {
  test::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const SphericalPulse p(rng.uniform(0.2, 3.0), rng.uniform(0.2, 4.0), rng.uniform(0.3, 3.0));
    const double r = rng.uniform(0.2, 5.0);
    const double t = rng.uniform(0.0, 10.0);
    const double fd = test::central_diff([&](double s) { return eval_spherical_pulse(p, r, s); }, t,
                                         1e-5);
    const double exact = eval_spherical_pulse_rate(p, r, t);
    // Relative to the rate's envelope A omega / r, so zero crossings do not blow up.
    EXPECT_LE(std::abs(fd - exact), 1e-7 * p.amplitude() * p.omega() / r)
        << "r=" << r << " t=" << t;
  }
}

TEST(SphericalPulse, RTimesPulseIsATravelingWave) {
  test::Rng rng(12);
  const SphericalPulse p(1.7, 2.0, 1.5);
  for (int i = 0; i < 100; ++i) {
    const double r = rng.uniform(0.5, 4.0);
    const double t = rng.uniform(0.0, 5.0);
    const double d = rng.uniform(-0.4, 3.0);
    const double before = r * eval_spherical_pulse(p, r, t);
    const double after = (r + p.c() * d) * eval_spherical_pulse(p, r + p.c() * d, t + d);
    EXPECT_NEAR(after, before, 1e-13);
  }
}

TEST(SphericalPulse, MatchesRadialFdtdOracle) {
  // A = 2 at r = 1 is 2 sin(t - 1). The oracle re-seeds at t - 0.5 and
  // evolves v = r u over the last half unit of time.
  const SphericalPulse p(2.0, 1.0, 1.0);
  const Grid1D grid = Grid1D::make(0.0, 4.5, 4000, 0.5, 1.0);
  for (double t = 1.25; t <= 3.0 + 1e-12; t += 0.25) {
    const double oracle = radial_oracle_eval(p, 1.0, t - 0.5, t, grid);
    EXPECT_NEAR(eval_spherical_pulse(p, 1.0, t), oracle, 1e-3) << "t=" << t;
    EXPECT_NEAR(eval_spherical_pulse(p, 1.0, t), 2.0 * std::sin(t - 1.0), 1e-15);
  }
}

TEST(GeneralizedRadial, ZeroProfileIsZero) {
  const RadialProfile z{Shape::zero(), 2.0};
  EXPECT_EQ(eval_generalized_radial(z, 1.5, 0.3), 0.0);
  EXPECT_EQ(eval_generalized_radial_rate(z, 1.5, 0.3), 0.0);
}

TEST(GeneralizedRadial, SineShapeReproducesThePulse) {
  test::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const SphericalPulse p(rng.uniform(0.1, 2.0), rng.uniform(0.1, 3.0), rng.uniform(0.5, 2.0));
    const RadialProfile g = as_radial_profile(p);
    const double r = rng.uniform(0.1, 6.0);
    const double t = rng.uniform(0.0, 6.0);
    const double scale = p.amplitude() / r;
    EXPECT_NEAR(eval_generalized_radial(g, r, t), eval_spherical_pulse(p, r, t), 1e-13 * scale);
    EXPECT_NEAR(eval_generalized_radial_rate(g, r, t), eval_spherical_pulse_rate(p, r, t),
                1e-13 * scale * p.omega());
  }
}

TEST(GeneralizedRadial, GaussianByDirectArithmetic) {
  const RadialProfile g{Shape::gaussian(0.0, 0.1), 1.0};
  const double expected = std::exp(-0.5 * (2.0 / 0.1) * (2.0 / 0.1)) / 2.0;
  // exp(-200) amplifies the argument's last-bit rounding.
  EXPECT_NEAR(eval_generalized_radial(g, 2.0, 0.0), expected, 1e-12 * expected);
  const RadialProfile h{Shape::gaussian(0.0, 1.0), 1.0};
  EXPECT_DOUBLE_EQ(eval_generalized_radial(h, 2.0, 1.5), std::exp(-0.125) / 2.0);
}

TEST(Shape, DerivativesMatchFiniteDifferences) {
  const Shape shapes[] = {Shape::gaussian(0.3, 0.2, 1.5), Shape::raised_cosine(-0.2, 0.7, 0.8),
                          Shape::triangle(0.1, 0.5, 2.0), Shape::linear(-0.7, 0.2),
                          Shape::outgoing_sine(1.2, 2.5)};
  test::Rng rng(14);
  for (const Shape& s : shapes) {
    const auto bp = s.breakpoints();
    for (int i = 0; i < 100; ++i) {
      const double x = rng.uniform(-1.5, 1.5);
      bool near_corner = false;
      for (double b : bp) near_corner = near_corner || std::abs(x - b) < 1e-2;
      if (near_corner) continue;
      auto f = [&](double y) { return s(y); };
      const double e1 = std::abs(test::central_diff(f, x, 1e-3) - s.derivative(x));
      const double e2 = std::abs(test::central_diff(f, x, 5e-4) - s.derivative(x));
      EXPECT_LE(e1, 1e-4) << s.name() << " x=" << x;
      // O(h^2): halving h cuts the error by ~4 unless already at round-off.
      if (e1 > 1e-9) EXPECT_LT(e2, 0.3 * e1) << s.name() << " x=" << x;
    }
  }
}

TEST(Shape, CompactShapesVanishOutsideSupport) {
  for (const Shape& s : {Shape::raised_cosine(1.0, 0.5), Shape::triangle(1.0, 0.5)}) {
    ASSERT_TRUE(s.support().has_value());
    EXPECT_EQ(s(0.49), 0.0);
    EXPECT_EQ(s(1.51), 0.0);
    EXPECT_EQ(s.derivative(1.6), 0.0);
    EXPECT_GT(s(1.0), 0.0);
  }
}

TEST(Shape, MakeShapeByName) {
  const Shape g = make_shape("gaussian", {{"center", 1.0}, {"width", 0.5}, {"amplitude", 2.0}});
  EXPECT_DOUBLE_EQ(g(1.0), 2.0);
  EXPECT_TRUE(make_shape("zero", {}).is_zero());
  EXPECT_DOUBLE_EQ(make_shape("linear", {})(0.3), 0.3);
  EXPECT_THROW(make_shape("sawtooth", {}), ParameterError);
  EXPECT_THROW(make_shape("gaussian", {{"width", 0.0}}), ParameterError);
  for (const auto& name : shape_families()) EXPECT_NO_THROW(make_shape(name, {}));
}

}  // namespace
}  // namespace huygens

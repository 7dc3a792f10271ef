#include "huygens/dalembert.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "huygens/errors.hpp"
#include "huygens/quadrature1d.hpp"

namespace huygens {

namespace {

constexpr double kQuadratureTol = 1e-12;

void require_speed(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw ParameterError("wave speed a must be positive");
}

std::vector<double> shifted(std::span<const double> points, double shift) {
  std::vector<double> out;
  out.reserve(2 * points.size());
  for (double p : points) {
    out.push_back(p - shift);
    out.push_back(p + shift);
  }
  return out;
}

// (1/2a) * integral of psi over [x - a t, x + a t]
double psi_term(const Shape& psi, double a, double x, double t) {
  if (psi.is_zero() || t == 0.0) return 0.0;
  const double integral = integrate_adaptive([&psi](double s) { return psi(s); }, x - a * t,
                                             x + a * t, psi.breakpoints(), {kQuadratureTol});
  return integral / (2.0 * a);
}

}  // namespace

State1D::State1D(WaveProfile1D profile, double a, double t1)
    : profile_(std::move(profile)), a_(a), t1_(t1) {
  require_speed(a);
  if (!(t1 >= 0.0)) throw ParameterError("re-seeding time t1 must be non-negative");
}

double State1D::value(double x) const { return dalembert_eval(profile_, a_, x, t1_); }

double State1D::rate(double x) const {
  const double s = a_ * t1_;
  double out = 0.5 * a_ * (profile_.phi_prime(x + s) - profile_.phi_prime(x - s));
  if (!profile_.psi.is_zero()) out += 0.5 * (profile_.psi(x + s) + profile_.psi(x - s));
  return out;
}

std::vector<double> State1D::breakpoints() const {
  const double s = a_ * t1_;
  std::vector<double> out = shifted(profile_.phi.breakpoints(), s);
  std::vector<double> more = shifted(profile_.psi.breakpoints(), s);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

double dalembert_eval(const WaveProfile1D& profile, double a, double x, double t) {
  require_speed(a);
  if (!(t >= 0.0)) throw ParameterError("time t must be non-negative");
  const double s = a * t;
  return 0.5 * (profile.phi(x + s) + profile.phi(x - s)) + psi_term(profile.psi, a, x, t);
}

State1D reinit_state(const WaveProfile1D& profile, double a, double t1) {
  return State1D(profile, a, t1);
}

double dalembert_reinit_eval(const State1D& state, double a, double x, double t2) {
  require_speed(a);
  if (!(t2 >= state.t1())) throw ParameterError("t2 must not precede the re-seeding time t1");
  const double tau = t2 - state.t1();
  const double s = a * tau;
  double out = 0.5 * (state.value(x + s) + state.value(x - s));
  if (tau > 0.0) {
    const std::vector<double> cuts = state.breakpoints();
    const double integral = integrate_adaptive([&state](double xi) { return state.rate(xi); },
                                               x - s, x + s, cuts, {kQuadratureTol});
    out += integral / (2.0 * a);
  }
  return out;
}

double EightTermDecomposition::sum() const {
  return std::accumulate(terms.begin(), terms.end(), 0.0);
}

double EightTermDecomposition::forward_sum() const {
  return terms[0] + terms[3] + terms[5] + terms[6];
}

EightTermDecomposition eight_term_decomposition(const WaveProfile1D& profile, double a,
                                                double t1, double t2, double x) {
  require_speed(a);
  if (!profile.psi.is_zero()) {
    throw UnsupportedCaseError("eight-term decomposition requires psi identically zero");
  }
  if (!(t1 > 0.0 && t2 > t1)) throw ParameterError("eight-term decomposition needs 0 < t1 < t2");

  const Shape& phi = profile.phi;
  const double forward_right = 0.25 * phi(x - a * t2);
  const double forward_left = 0.25 * phi(x + a * t2);
  const double back_right = 0.25 * phi(x - 2.0 * a * t1 + a * t2);
  const double back_left = 0.25 * phi(x + 2.0 * a * t1 - a * t2);

  EightTermDecomposition d;
  d.terms = {forward_right, back_right, back_left,     forward_left,
             -back_right,   forward_left, forward_right, -back_left};
  return d;
}

CancellationReport verify_cancellation(const EightTermDecomposition& decomp, double tolerance) {
  const auto& t = decomp.terms;
  CancellationReport report;
  report.pair_2_5 = std::abs(t[1] + t[4]);
  report.pair_3_8 = std::abs(t[2] + t[7]);
  report.reconstruction = std::abs(decomp.sum() - decomp.forward_sum());
  report.tolerance = tolerance;
  report.pass = report.pair_2_5 <= tolerance && report.pair_3_8 <= tolerance &&
                report.reconstruction <= tolerance;
  return report;
}

}  // namespace huygens

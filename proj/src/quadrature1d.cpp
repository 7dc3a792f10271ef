#include "huygens/quadrature1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "huygens/errors.hpp"

namespace huygens {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;

struct Piece {
  double value = 0.0;
  double error = 0.0;
  double noise = 0.0;  // round-off floor of the accepted panels
};

Piece refine(const std::function<double(double)>& f, double a, double b, double tol,
             int depth_left) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double err = 0.0;
  double l1 = 0.0;
  const double whole = Rule::integrate(f, a, b, 0, 0.0, &err, &l1);
  // The non-adaptive estimate comes back in units of the reference panel [-1, 1].
  err *= 0.5 * (b - a);
  // Below a few ulps of the integrand scale the estimate is pure round-off.
  const double noise = 64.0 * eps * l1;
  if (err <= std::max(tol, noise) || depth_left == 0 ||
      b - a <= 4.0 * eps * std::max(std::abs(a), std::abs(b))) {
    return {whole, err, noise};
  }
  const double mid = 0.5 * (a + b);
  Piece left = refine(f, a, mid, 0.5 * tol, depth_left - 1);
  Piece right = refine(f, mid, b, 0.5 * tol, depth_left - 1);
  return {left.value + right.value, left.error + right.error, left.noise + right.noise};
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          std::span<const double> breakpoints, const AdaptiveOptions& options) {
  if (a == b) return 0.0;
  if (a > b) return -integrate_adaptive(f, b, a, breakpoints, options);

  std::vector<double> cuts{a};
  for (double p : breakpoints) {
    if (p > a && p < b) cuts.push_back(p);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const double length = b - a;
  double total = 0.0;
  double error = 0.0;
  double noise = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double share = options.abs_tol * (cuts[i + 1] - cuts[i]) / length;
    Piece piece = refine(f, cuts[i], cuts[i + 1], share, options.max_depth);
    total += piece.value;
    error += piece.error;
    noise += piece.noise;
  }
  if (!(error <= options.abs_tol + noise)) {
    throw NumericError("adaptive quadrature did not converge", error, options.abs_tol);
  }
  return total;
}

}  // namespace huygens

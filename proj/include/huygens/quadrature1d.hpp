#pragma once

#include <functional>
#include <span>

namespace huygens {

struct AdaptiveOptions {
  double abs_tol = 1e-12;
  int max_depth = 40;
};

/// Adaptive Gauss-Legendre/Kronrod integral of f over [a, b] (a <= b or a > b).
///
/// The interval is first split at every breakpoint inside (a, b), then each
/// piece is bisected until the local error estimate fits its share of
/// abs_tol. Throws NumericError carrying the achieved error otherwise.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          std::span<const double> breakpoints = {},
                          const AdaptiveOptions& options = {});

}  // namespace huygens

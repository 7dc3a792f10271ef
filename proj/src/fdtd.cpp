#include "huygens/fdtd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "huygens/errors.hpp"

namespace huygens {

Grid1D Grid1D::make(double x_min, double x_max, int n_cells, double cfl, double a) {
  if (!(x_max > x_min)) throw ParameterError("grid needs x_max > x_min");
  if (n_cells < 4) throw ParameterError("grid needs at least 4 cells");
  if (!(a > 0.0)) throw ParameterError("wave speed must be positive");
  if (!(cfl > 0.0)) throw ParameterError("CFL number must be positive");
  if (cfl > 1.0) {
    throw StabilityError("CFL number " + std::to_string(cfl) + " exceeds 1");
  }
  Grid1D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_cells = n_cells;
  g.dx = (x_max - x_min) / n_cells;
  g.cfl = cfl;
  g.dt = cfl * g.dx / a;
  return g;
}

Grid1D Grid1D::fitted_to(double duration, double a) const {
  Grid1D g = *this;
  if (duration <= 0.0) return g;
  const double steps = std::ceil(duration / dt - 1e-9);
  g.dt = duration / steps;
  g.cfl = a * g.dt / dx;
  return g;
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = node(i);
  return out;
}

double leapfrog_energy(std::span<const double> u_prev, std::span<const double> u_next, double a,
                       const Grid1D& grid) {
  double kinetic = 0.0;
  double strain = 0.0;
  const std::size_t n = u_prev.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double v = (u_next[i] - u_prev[i]) / grid.dt;
    kinetic += v * v;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    strain += (u_next[i + 1] - u_next[i]) * (u_prev[i + 1] - u_prev[i]);
  }
  return 0.5 * grid.dx * kinetic + 0.5 * a * a * strain / grid.dx;
}

FdtdHistory fdtd1d_evolve(std::span<const double> value0, std::span<const double> rate0,
                          double a, const Grid1D& grid, double t_end, Boundary bc,
                          std::span<const double> snapshot_times) {
  const std::size_t n = grid.size();
  if (value0.size() != n || rate0.size() != n) {
    throw ParameterError("initial data size does not match the grid");
  }
  if (a * grid.dt / grid.dx > 1.0 + 1e-12) throw StabilityError("CFL number exceeds 1");
  if (!(t_end >= 0.0)) throw ParameterError("t_end must be non-negative");

  const long n_steps = std::lround(t_end / grid.dt);
  std::vector<std::pair<long, double>> wanted;
  for (double t : snapshot_times) {
    if (t < 0.0 || t > t_end) throw ParameterError("snapshot time outside [0, t_end]");
    wanted.emplace_back(std::lround(t / grid.dt), t);
  }
  wanted.emplace_back(n_steps, t_end);
  std::sort(wanted.begin(), wanted.end());

  const double lambda2 = (a * grid.dt / grid.dx) * (a * grid.dt / grid.dx);
  const double courant = a * grid.dt / grid.dx;

  std::vector<double> prev(value0.begin(), value0.end());
  std::vector<double> curr(n, 0.0);
  std::vector<double> next(n, 0.0);

  FdtdHistory history;
  history.grid = grid;
  std::size_t w = 0;
  auto record = [&](long step, const std::vector<double>& u) {
    while (w < wanted.size() && wanted[w].first == step) {
      history.snapshots.push_back({wanted[w].second, static_cast<double>(step) * grid.dt, u});
      ++w;
    }
  };

  auto apply_boundary = [&](std::vector<double>& u_new, const std::vector<double>& u_old) {
    if (bc == Boundary::ZeroDirichlet) {
      u_new.front() = 0.0;
      u_new.back() = 0.0;
    } else {
      // First-order one-way wave conditions u_t -+ a u_x = 0.
      u_new.front() = u_old.front() + courant * (u_old[1] - u_old.front());
      u_new.back() = u_old.back() - courant * (u_old.back() - u_old[n - 2]);
    }
  };

  if (bc == Boundary::ZeroDirichlet) {
    prev.front() = 0.0;
    prev.back() = 0.0;
  }
  record(0, prev);
  if (n_steps == 0) return history;

  // Taylor start: u1 = u0 + dt v0 + dt^2 a^2 D2 u0 / 2.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    curr[i] = prev[i] + grid.dt * rate0[i] + 0.5 * lambda2 * (prev[i + 1] - 2.0 * prev[i] + prev[i - 1]);
  }
  apply_boundary(curr, prev);
  history.energy.push_back(leapfrog_energy(prev, curr, a, grid));
  record(1, curr);

  for (long step = 2; step <= n_steps; ++step) {
    for (std::size_t i = 1; i + 1 < n; ++i) {
      next[i] = 2.0 * curr[i] - prev[i] + lambda2 * (curr[i + 1] - 2.0 * curr[i] + curr[i - 1]);
    }
    apply_boundary(next, curr);
    std::swap(prev, curr);
    std::swap(curr, next);
    history.energy.push_back(leapfrog_energy(prev, curr, a, grid));
    record(step, curr);
  }
  return history;
}

double cubic_interpolate(const Grid1D& grid, std::span<const double> values, double x) {
  if (x < grid.x_min || x > grid.x_max) {
    throw DomainError("interpolation point outside the grid");
  }
  const long last = static_cast<long>(values.size()) - 1;
  long i0 = static_cast<long>(std::floor((x - grid.x_min) / grid.dx)) - 1;
  i0 = std::clamp(i0, 0L, last - 3);
  double out = 0.0;
  for (long j = 0; j < 4; ++j) {
    const double xj = grid.node(static_cast<std::size_t>(i0 + j));
    double basis = 1.0;
    for (long m = 0; m < 4; ++m) {
      if (m == j) continue;
      const double xm = grid.node(static_cast<std::size_t>(i0 + m));
      basis *= (x - xm) / (xj - xm);
    }
    out += basis * values[static_cast<std::size_t>(i0 + j)];
  }
  return out;
}

double radial_oracle_eval(const std::function<double(double)>& value,
                          const std::function<double(double)>& rate, double c, double R,
                          double t1, double t2, const Grid1D& grid) {
  if (!(c > 0.0)) throw ParameterError("wave speed must be positive");
  if (!(t2 >= t1)) throw ParameterError("t2 must not precede t1");
  if (grid.x_min != 0.0) throw DomainError("radial grid must start at r = 0");
  if (!(R > 0.0)) throw DomainError("R must be positive");
  const double tau = t2 - t1;
  const double margin = 4.0 * grid.dx;
  if (!(grid.x_max > R + c * tau + margin)) {
    throw DomainError("radial grid too short: need r_max > R + c (t2 - t1) + margin");
  }
  const double front = c * t1;
  const std::size_t n = grid.size();
  std::vector<double> v0(n, 0.0);
  std::vector<double> w0(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    const double r = grid.node(i);
    // Dual-cell fraction inside the front, so a jump at r = c t1 lands at the
    // right place to O(dx^2) instead of snapping to a node.
    const double inside = std::clamp((front - (r - 0.5 * grid.dx)) / grid.dx, 0.0, 1.0);
    if (inside == 0.0) continue;
    const double r_eval = std::min(r, front);
    v0[i] = inside * r * value(r_eval);
    w0[i] = inside * r * rate(r_eval);
  }
  if (tau == 0.0) return cubic_interpolate(grid, v0, R) / R;

  const Grid1D fitted = grid.fitted_to(tau, c);
  FdtdHistory h = fdtd1d_evolve(v0, w0, c, fitted, tau, Boundary::ZeroDirichlet);
  return cubic_interpolate(fitted, h.snapshots.back().values, R) / R;
}

double radial_oracle_eval(const SphericalPulse& pulse, double R, double t1, double t2,
                          const Grid1D& grid) {
  return radial_oracle_eval([&](double r) { return eval_spherical_pulse(pulse, r, t1); },
                            [&](double r) { return eval_spherical_pulse_rate(pulse, r, t1); },
                            pulse.c(), R, t1, t2, grid);
}

double radial_oracle_eval(const RadialProfile& profile, double R, double t1, double t2,
                          const Grid1D& grid) {
  return radial_oracle_eval([&](double r) { return eval_generalized_radial(profile, r, t1); },
                            [&](double r) { return eval_generalized_radial_rate(profile, r, t1); },
                            profile.c, R, t1, t2, grid);
}

}  // namespace huygens

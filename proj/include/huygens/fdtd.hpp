#pragma once

#include <functional>
#include <span>
#include <vector>

#include "huygens/profiles.hpp"

namespace huygens {

/// Uniform grid of n_cells + 1 nodes on [x_min, x_max] with an explicit time step.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_cells = 1;
  double dx = 1.0;
  double dt = 0.5;
  double cfl = 0.5;

  /// dt = cfl * dx / a. Throws StabilityError for cfl > 1.
  static Grid1D make(double x_min, double x_max, int n_cells, double cfl, double a);

  /// Copy with dt shrunk so that `duration` is a whole number of steps.
  Grid1D fitted_to(double duration, double a) const;

  std::size_t size() const { return static_cast<std::size_t>(n_cells) + 1; }
  double node(std::size_t i) const { return x_min + static_cast<double>(i) * dx; }
  std::vector<double> nodes() const;
};

enum class Boundary { ZeroDirichlet, Outflow };

struct Snapshot {
  double requested_time = 0.0;
  double time = 0.0;  // time actually reached (nearest whole step)
  std::vector<double> values;
};

struct FdtdHistory {
  Grid1D grid;
  std::vector<Snapshot> snapshots;
  /// Leapfrog energy between consecutive levels, one entry per step.
  std::vector<double> energy;
};

/// Second-order leapfrog for u_tt = a^2 u_xx with a Taylor first step.
/// Snapshots are taken at the step nearest each requested time; t_end is
/// always included.
FdtdHistory fdtd1d_evolve(std::span<const double> value0, std::span<const double> rate0,
                          double a, const Grid1D& grid, double t_end, Boundary bc,
                          std::span<const double> snapshot_times = {});

/// Conserved discrete energy of the leapfrog scheme between levels n and n+1.
double leapfrog_energy(std::span<const double> u_prev, std::span<const double> u_next, double a,
                       const Grid1D& grid);

/// 4-point Lagrange interpolation of sampled values at x.
double cubic_interpolate(const Grid1D& grid, std::span<const double> values, double x);

/// Radial oracle for the re-seeded 3D problem via v = r u, v(0, t) = 0.
/// `value`/`rate` give u(r, t1) and u_t(r, t1) for r > 0; both are cut to zero
/// beyond the front r = c t1. Returns u(R, t2).
double radial_oracle_eval(const std::function<double(double)>& value,
                          const std::function<double(double)>& rate, double c, double R,
                          double t1, double t2, const Grid1D& grid);

double radial_oracle_eval(const SphericalPulse& pulse, double R, double t1, double t2,
                          const Grid1D& grid);
double radial_oracle_eval(const RadialProfile& profile, double R, double t1, double t2,
                          const Grid1D& grid);

}  // namespace huygens

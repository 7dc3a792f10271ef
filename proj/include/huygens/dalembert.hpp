#pragma once

#include <array>
#include <vector>

#include "huygens/profiles.hpp"

namespace huygens {

/// Solution u(., t1) and u_t(., t1) of the 1D problem, used as new initial data.
///
/// Both fields are exact closed forms of the original data; nothing is sampled.
class State1D {
 public:
  State1D(WaveProfile1D profile, double a, double t1);

  double t1() const { return t1_; }
  double speed() const { return a_; }
  const WaveProfile1D& profile() const { return profile_; }

  double value(double x) const;
  double rate(double x) const;

  /// Points where value/rate may lose smoothness (original breakpoints shifted by +-a t1).
  std::vector<double> breakpoints() const;

 private:
  WaveProfile1D profile_;
  double a_;
  double t1_;
};

/// d'Alembert's solution at (x, t); the psi integral is skipped when psi is zero.
double dalembert_eval(const WaveProfile1D& profile, double a, double x, double t);

State1D reinit_state(const WaveProfile1D& profile, double a, double t1);

/// d'Alembert's formula applied to (state.value, state.rate) over tau = t2 - t1.
double dalembert_reinit_eval(const State1D& state, double a, double x, double t2);

/// The eight quarter-amplitude waves of the re-seeded solution, psi = 0.
///
/// terms[0..3] come from u(x, t1), terms[4..7] from u_t(x, t1):
///   T1 =  phi(x - a t2)/4        T5 = -phi(x - 2a t1 + a t2)/4
///   T2 =  phi(x - 2a t1 + a t2)/4  T6 =  phi(x + a t2)/4
///   T3 =  phi(x + 2a t1 - a t2)/4  T7 =  phi(x - a t2)/4
///   T4 =  phi(x + a t2)/4        T8 = -phi(x + 2a t1 - a t2)/4
/// (T2, T5) and (T3, T8) are the back-traveling waves and their counterterms.
struct EightTermDecomposition {
  std::array<double, 8> terms{};

  static constexpr std::array<int, 4> kFromValue{0, 1, 2, 3};
  static constexpr std::array<int, 4> kFromRate{4, 5, 6, 7};

  double sum() const;
  /// T1 + T4 + T6 + T7, the surviving forward waves.
  double forward_sum() const;
};

EightTermDecomposition eight_term_decomposition(const WaveProfile1D& profile, double a,
                                                double t1, double t2, double x);

struct CancellationReport {
  double pair_2_5 = 0.0;        // |T2 + T5|
  double pair_3_8 = 0.0;        // |T3 + T8|
  double reconstruction = 0.0;  // |sum - forward_sum|
  double tolerance = 1e-12;
  bool pass = false;
};

CancellationReport verify_cancellation(const EightTermDecomposition& decomp,
                                       double tolerance = 1e-12);

}  // namespace huygens

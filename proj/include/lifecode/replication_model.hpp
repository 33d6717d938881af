#pragma once

// Continuous-time picture of one search step driven by its environment:
// relaxation to the uniform state, a sudden oracle kick, a damped oscillation
// about the uniform-state projection, and measurement at the opposite
// extreme of the oscillation.
//
// With a(0) = U_b|s> and s_bar = <s|a(0)>|s>, the state follows
//   a(t) = s_bar + cos(2 pi t / t_osc) exp(-t / t_r) (a(0) - s_bar)
// and is measured at t* = t_osc / 2, so the deviation is scaled by
// -gamma with gamma = exp(-t_osc / (2 t_r)). Amplitude lost to damping is
// treated as leaked and the measured state is renormalised. In the undamped
// limit the measured state is exactly -U_s U_b |s>.

#include <cstddef>
#include <span>
#include <vector>

#include "lifecode/search_core.hpp"

namespace lifecode::replication {

struct ReplicationParams {
  double t_b = 1e-3;    // kick duration
  double t_osc = 1.0;   // oscillation period
  double t_r = 1.0;     // relaxation time
  std::size_t size = 4;
  std::size_t target = 0;

  /// Requires 0 < t_b < t_osc <= t_r and a valid search problem.
  void validate() const;
};

struct ReplicationOutcome {
  search::SearchState final_state;
  double success_probability;
  double damping_factor;
};

/// exp(-t_osc / (2 t_r)).
double damping_factor(double t_osc, double t_r);

/// Unnormalised state on the damped trajectory at time t >= 0.
std::vector<double> trajectory_state(const ReplicationParams& params, double t);

ReplicationOutcome run_replication(const ReplicationParams& params);

struct SweepRow {
  double ratio;  // t_osc / t_r
  double success_probability;
  double damping_factor;
};

/// Runs the model at each t_osc/t_r ratio with t_r = 1 and t_b = t_osc/1000.
/// Rows come back in ascending ratio order; any ratio outside (0, 1] is
/// rejected with a ConstraintError.
std::vector<SweepRow> hierarchy_sweep(std::size_t n, std::size_t target, std::span<const double> ratios);

}  // namespace lifecode::replication

#include "lifecode/replication_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include "lifecode/errors.hpp"

namespace lifecode::replication {

namespace {

// Amplitudes after the kick, plus their projection onto the uniform state.
struct KickedState {
  std::vector<double> kicked;
  std::vector<double> projection;
};

KickedState kick(std::size_t n, std::size_t target) {
  const search::SearchState s = search::uniform_state(n);
  const search::SearchState kicked = search::apply_oracle(s, target);
  double overlap = 0.0;
  for (std::size_t i = 0; i < n; ++i) overlap += s[i] * kicked[i];
  KickedState out{{kicked.amplitudes().begin(), kicked.amplitudes().end()}, std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) out.projection[i] = overlap * s[i];
  return out;
}

std::string describe(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

void ReplicationParams::validate() const {
  search::SearchProblem{size, target}.validate();
  if (!(t_b > 0.0) || !(t_osc > 0.0) || !(t_r > 0.0)) {
    throw ConstraintError("timescales t_b, t_osc, t_r must all be positive");
  }
  if (!(t_b < t_osc)) {
    throw ConstraintError("kick must be sudden: t_b (" + describe(t_b) + ") must be smaller than t_osc (" +
                          describe(t_osc) + ")");
  }
  if (t_osc > t_r) {
    throw ConstraintError("oscillations must not be overdamped: t_osc <= t_r is violated (t_osc = " +
                          describe(t_osc) + ", t_r = " + describe(t_r) + ")");
  }
}

double damping_factor(double t_osc, double t_r) { return std::exp(-t_osc / (2.0 * t_r)); }

std::vector<double> trajectory_state(const ReplicationParams& params, double t) {
  search::SearchProblem{params.size, params.target}.validate();
  const KickedState k = kick(params.size, params.target);
  const double factor = std::cos(2.0 * std::numbers::pi * t / params.t_osc) * std::exp(-t / params.t_r);
  std::vector<double> a(params.size);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = k.projection[i] + factor * (k.kicked[i] - k.projection[i]);
  }
  return a;
}

ReplicationOutcome run_replication(const ReplicationParams& params) {
  params.validate();
  const KickedState k = kick(params.size, params.target);
  const double gamma = damping_factor(params.t_osc, params.t_r);

  // cos(pi) = -1 at the opposite extreme.
  std::vector<double> a(params.size);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = k.projection[i] - gamma * (k.kicked[i] - k.projection[i]);
    norm2 += a[i] * a[i];
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : a) x *= inv;

  search::SearchState final_state(std::move(a));
  const double p = search::target_probability(final_state, params.target);
  return {std::move(final_state), p, gamma};
}

std::vector<SweepRow> hierarchy_sweep(std::size_t n, std::size_t target, std::span<const double> ratios) {
  search::SearchProblem{n, target}.validate();
  for (double r : ratios) {
    if (!(r > 0.0) || r > 1.0) {
      throw ConstraintError("ratio t_osc/t_r = " + describe(r) +
                            " outside (0, 1]: the bound t_osc <= t_r must hold");
    }
  }
  std::vector<double> sorted(ratios.begin(), ratios.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<SweepRow> rows(sorted.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(sorted.size()); ++i) {
    const double r = sorted[static_cast<std::size_t>(i)];
    const ReplicationOutcome out = run_replication({r * 1e-3, r, 1.0, n, target});
    rows[static_cast<std::size_t>(i)] = {r, out.success_probability, out.damping_factor};
  }
  return rows;
}

}  // namespace lifecode::replication

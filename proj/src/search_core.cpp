#include "lifecode/search_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lifecode/errors.hpp"
#include "lifecode/kernels.hpp"

namespace lifecode::search {

namespace {

double grover_angle(std::size_t n) { return std::asin(1.0 / std::sqrt(static_cast<double>(n))); }

void require_positive(std::size_t n) {
  if (n == 0) throw InvalidSizeError("database size must be at least 1");
}

}  // namespace

SearchState::SearchState(std::vector<double> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw InvalidSizeError("search state needs at least one amplitude");
}

double SearchState::norm_squared() const {
  double acc = 0.0;
  for (double a : amplitudes_) acc += a * a;
  return acc;
}

void SearchProblem::validate() const {
  require_positive(size);
  if (target >= size) {
    throw IndexError("target " + std::to_string(target) + " out of range for database of size " +
                     std::to_string(size));
  }
}

SearchState uniform_state(std::size_t n) {
  require_positive(n);
  return SearchState(std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n))));
}

SearchState apply_oracle(SearchState state, std::size_t target) {
  if (target >= state.size()) {
    throw IndexError("oracle target " + std::to_string(target) + " out of range for state of size " +
                     std::to_string(state.size()));
  }
  auto amps = state.mutable_amplitudes();
  amps[target] = -amps[target];
  return state;
}

SearchState apply_diffusion(SearchState state) {
  kernels::reflect_about_mean(state.mutable_amplitudes());
  return state;
}

SearchState grover_iterate(const SearchProblem& problem, std::size_t q) {
  problem.validate();
  SearchState state = uniform_state(problem.size);
  for (std::size_t i = 0; i < q; ++i) {
    state = apply_diffusion(apply_oracle(std::move(state), problem.target));
  }
  return state;
}

double success_probability(std::size_t n, std::size_t q) {
  require_positive(n);
  const double s = std::sin((2.0 * static_cast<double>(q) + 1.0) * grover_angle(n));
  return s * s;
}

double success_probability(const SearchProblem& problem, std::size_t q) {
  problem.validate();
  return success_probability(problem.size, q);
}

double target_probability(const SearchState& state, std::size_t target) {
  if (target >= state.size()) throw IndexError("target out of range");
  return state[target] * state[target];
}

QuerySolution optimal_queries(std::size_t n) {
  require_positive(n);
  QuerySolution sol;
  sol.q_real = std::max(0.0, (std::numbers::pi / (2.0 * grover_angle(n)) - 1.0) / 2.0);

  const auto lo = static_cast<std::size_t>(std::floor(sol.q_real));
  const auto hi = static_cast<std::size_t>(std::ceil(sol.q_real));
  const double p_lo = success_probability(n, lo);
  const double p_hi = success_probability(n, hi);
  const bool hi_better = p_hi - p_lo > 1e-12;
  sol.q_int = hi_better ? hi : lo;
  const double p = hi_better ? p_hi : p_lo;

  sol.residual_error = std::clamp(1.0 - p, 0.0, 1.0);
  if (std::abs(sol.q_real - std::round(sol.q_real)) <= 1e-9) sol.residual_error = 0.0;
  return sol;
}

double database_size_for_queries(double q) {
  if (q < 0.0) throw InputError("query count must be non-negative");
  const double s = std::sin(std::numbers::pi / (2.0 * (2.0 * q + 1.0)));
  return 1.0 / (s * s);
}

double database_size_for_queries(std::size_t q) {
  if (q == 0) return 1.0;
  return database_size_for_queries(static_cast<double>(q));
}

ClassicalQueryCounts classical_query_counts(std::size_t n) {
  require_positive(n);
  return {std::log2(static_cast<double>(n)), static_cast<double>(n) / 2.0};
}

}  // namespace lifecode::search

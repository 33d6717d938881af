#pragma once

// Exact simulation of amplitude-amplification database search on real
// amplitudes, closed-form query counts, and classical search baselines.
//
// Both reflections used by the search are real operators, so states stay in
// the real section of the Hilbert space and amplitudes are stored as doubles.
// Item indices are zero-based.

#include <cstddef>
#include <span>
#include <vector>

namespace lifecode::search {

/// Unit vector of signed real amplitudes over N items.
class SearchState {
 public:
  /// Takes ownership of `amplitudes`; throws InvalidSizeError when empty.
  explicit SearchState(std::vector<double> amplitudes);

  std::size_t size() const noexcept { return amplitudes_.size(); }
  std::span<const double> amplitudes() const noexcept { return amplitudes_; }
  double operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;

  /// Mutable access for the in-place kernels; callers keep the unit norm.
  std::span<double> mutable_amplitudes() noexcept { return amplitudes_; }

  friend bool operator==(const SearchState&, const SearchState&) = default;

 private:
  std::vector<double> amplitudes_;
};

struct SearchProblem {
  std::size_t size = 1;
  std::size_t target = 0;

  /// Throws InvalidSizeError for size 0 and IndexError for target >= size.
  void validate() const;
};

struct QuerySolution {
  double q_real = 0.0;        // exact real root of (2Q+1) asin(1/sqrt N) = pi/2
  std::size_t q_int = 0;      // best integer iteration count
  double residual_error = 0;  // 1 - success probability at q_int
};

SearchState uniform_state(std::size_t n);

/// Sign flip of the target amplitude (the oracle reflection 1 - 2|b><b|).
SearchState apply_oracle(SearchState state, std::size_t target);

/// Reflection about the average amplitude (2|s><s| - 1).
SearchState apply_diffusion(SearchState state);

/// (diffusion . oracle)^q applied to the uniform state.
SearchState grover_iterate(const SearchProblem& problem, std::size_t q);

/// Closed form sin^2((2q+1) asin(1/sqrt N)).
double success_probability(const SearchProblem& problem, std::size_t q);
double success_probability(std::size_t n, std::size_t q);

/// Probability of measuring `target` in `state`.
double target_probability(const SearchState& state, std::size_t target);

/// Real solution of the optimality condition and its best integer rounding.
/// Between floor and ceiling of q_real the one with higher success
/// probability wins; ties (within 1e-12) go to fewer queries.
QuerySolution optimal_queries(std::size_t n);

/// N = 1 / sin^2(pi / (2(2q+1))). q = 0 gives the single-item database.
double database_size_for_queries(double q);
double database_size_for_queries(std::size_t q);

struct ClassicalQueryCounts {
  double sorted = 0.0;             // binary search, log2 N
  double unsorted_expected = 0.0;  // linear scan, N/2 on average
};

ClassicalQueryCounts classical_query_counts(std::size_t n);

}  // namespace lifecode::search

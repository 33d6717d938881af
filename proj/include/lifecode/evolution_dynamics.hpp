#pragma once

// Discrete-time population evolution phi(t+1) = M phi(t) under a fixed
// resource budget. Column sums of M equal 1, so the total population is
// conserved. Stochastic matrices keep every entry in [0, 1]; Signed matrices
// allow negative couplings, and a negativity policy decides what happens
// when a species would be driven below zero.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lifecode::evolution {

enum class MatrixMode { Stochastic, Signed };
enum class NegativityPolicy { Strict, Projected };

/// Square row-major matrix without any column-sum requirement.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t size) : n(size), data(size * size, 0.0) {}

  /// Throws ShapeError unless every row has rows.size() entries.
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static DenseMatrix identity(std::size_t size);

  double& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }

  double column_sum(std::size_t j) const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

class PopulationVector {
 public:
  /// Total is the sum of `phi`; every entry must be finite and >= 0 and the
  /// total positive.
  explicit PopulationVector(std::vector<double> phi);

  std::size_t size() const noexcept { return phi_.size(); }
  std::span<const double> phi() const noexcept { return phi_; }
  double operator[](std::size_t i) const { return phi_[i]; }
  double total() const noexcept { return total_; }

  friend bool operator==(const PopulationVector&, const PopulationVector&) = default;

 private:
  friend class EvolutionMatrix;
  PopulationVector(std::vector<double> phi, double total) : phi_(std::move(phi)), total_(total) {}

  std::vector<double> phi_;
  double total_;
};

class EvolutionMatrix {
 public:
  /// Validates column sums (ColumnSumError) and, for Stochastic mode, that
  /// entries lie in [0, 1] (ConstraintError).
  EvolutionMatrix(DenseMatrix entries, MatrixMode mode);

  /// Stochastic when every entry is non-negative, Signed otherwise.
  static EvolutionMatrix infer(DenseMatrix entries);

  std::size_t size() const noexcept { return entries_.n; }
  MatrixMode mode() const noexcept { return mode_; }
  const DenseMatrix& entries() const noexcept { return entries_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  struct StepResult {
    PopulationVector population;
    bool projected = false;  // negatives were clamped (Projected policy only)
  };

  /// One application of M. The result is rescaled to the original total to
  /// keep rounding drift out of long runs.
  StepResult apply(const PopulationVector& pop, NegativityPolicy policy) const;

 private:
  DenseMatrix entries_;
  MatrixMode mode_;
};

EvolutionMatrix::StepResult step(const PopulationVector& pop, const EvolutionMatrix& m, NegativityPolicy policy);

struct Trajectory {
  std::vector<PopulationVector> states;  // steps + 1 entries, states[0] = start
  std::size_t negativity_events = 0;
};

Trajectory evolve(const PopulationVector& pop, const EvolutionMatrix& m, std::size_t steps,
                  NegativityPolicy policy);

struct ConvergenceOptions {
  double winner_threshold = 0.99;
  double stationarity_tol = 1e-8;
  std::size_t max_steps = 1'000'000;

  void validate() const;
};

struct ConvergenceReport {
  std::optional<std::size_t> steps_to_winner;
  std::optional<std::size_t> winner;
  std::optional<std::size_t> stationarity_steps;
  std::size_t negativity_events = 0;
  std::size_t steps_run = 0;

  friend bool operator==(const ConvergenceReport&, const ConvergenceReport&) = default;
};

/// steps_to_winner: first t >= 0 with max_i phi_i(t) / total >= threshold.
/// stationarity_steps: first t >= 1 with |phi(t) - phi(t-1)|_1 / total <= tol.
/// Runs until both are attained, a fixed point is hit, or max_steps.
ConvergenceReport convergence_time(const PopulationVector& pop, const EvolutionMatrix& m, NegativityPolicy policy,
                                   const ConvergenceOptions& options = {});

struct SpeedupRow {
  double lambda = 0.0;
  bool feasible = true;      // false when Strict hit a negative population
  std::string note;          // why the row is infeasible or invalid
  ConvergenceReport report;  // meaningful only when feasible
};

/// Convergence of M(lambda) = base + lambda * perturbation for each lambda,
/// in ascending lambda order. `perturbation` columns must sum to zero.
/// Infeasible rows are reported, not thrown.
std::vector<SpeedupRow> speedup_experiment(const EvolutionMatrix& base, const DenseMatrix& perturbation,
                                           std::span<const double> lambdas, const PopulationVector& pop,
                                           NegativityPolicy policy, const ConvergenceOptions& options = {});

/// Geometric convergence rate of the trajectory started at `pop`, from a
/// least-squares log-slope fit over the second half of `window` steps.
///
/// The increments d(t) = phi(t+1) - phi(t) obey d(t+1) = M d(t) and stay in
/// the zero-sum subspace, so they are iterated directly and rescaled every
/// step; this keeps the tail far above floating-point underflow. Returns
/// nullopt when the increments vanish (the start is already stationary).
std::optional<double> measure_convergence_rate(const EvolutionMatrix& m, const PopulationVector& pop,
                                               std::size_t window = 2000);

}  // namespace lifecode::evolution

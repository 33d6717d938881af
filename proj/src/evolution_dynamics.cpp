#include "lifecode/evolution_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "lifecode/errors.hpp"
#include "lifecode/kernels.hpp"

namespace lifecode::evolution {

namespace {

constexpr double kColumnSumTol = 1e-12;
constexpr double kStrictNegativeTol = 1e-12;

double column_abs_sum(const DenseMatrix& m, std::size_t j) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.n; ++i) acc += std::abs(m(i, j));
  return acc;
}

void check_column_sums(const DenseMatrix& m, double expected) {
  for (std::size_t j = 0; j < m.n; ++j) {
    const double s = m.column_sum(j);
    if (!(std::abs(s - expected) <= kColumnSumTol * std::max(1.0, column_abs_sum(m, j)))) {
      throw ColumnSumError(j, s, expected);
    }
  }
}

}  // namespace

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  DenseMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw ShapeError("matrix row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(rows.size()));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.data.begin() + static_cast<std::ptrdiff_t>(i * m.n));
  }
  return m;
}

DenseMatrix DenseMatrix::identity(std::size_t size) {
  DenseMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1.0;
  return m;
}

double DenseMatrix::column_sum(std::size_t j) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += (*this)(i, j);
  return acc;
}

PopulationVector::PopulationVector(std::vector<double> phi) : phi_(std::move(phi)), total_(0.0) {
  if (phi_.empty()) throw ShapeError("population vector is empty");
  for (std::size_t i = 0; i < phi_.size(); ++i) {
    if (!std::isfinite(phi_[i]) || phi_[i] < 0.0) {
      throw ConstraintError("population of species " + std::to_string(i) + " must be finite and non-negative");
    }
    total_ += phi_[i];
  }
  if (!(total_ > 0.0)) throw ConstraintError("total population must be positive");
}

EvolutionMatrix::EvolutionMatrix(DenseMatrix entries, MatrixMode mode) : entries_(std::move(entries)), mode_(mode) {
  if (entries_.n == 0) throw ShapeError("evolution matrix is empty");
  if (entries_.data.size() != entries_.n * entries_.n) throw ShapeError("evolution matrix is not square");
  for (double v : entries_.data) {
    if (!std::isfinite(v)) throw ConstraintError("evolution matrix has a non-finite entry");
  }
  check_column_sums(entries_, 1.0);
  if (mode_ == MatrixMode::Stochastic) {
    for (std::size_t i = 0; i < entries_.n; ++i) {
      for (std::size_t j = 0; j < entries_.n; ++j) {
        const double v = entries_(i, j);
        if (v < 0.0 || v > 1.0) {
          throw ConstraintError("stochastic matrix entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") outside [0, 1]");
        }
      }
    }
  }
}

EvolutionMatrix EvolutionMatrix::infer(DenseMatrix entries) {
  const bool any_negative = std::any_of(entries.data.begin(), entries.data.end(), [](double v) { return v < 0.0; });
  return {std::move(entries), any_negative ? MatrixMode::Signed : MatrixMode::Stochastic};
}

EvolutionMatrix::StepResult EvolutionMatrix::apply(const PopulationVector& pop, NegativityPolicy policy) const {
  if (pop.size() != size()) {
    throw ShapeError("population has " + std::to_string(pop.size()) + " species but matrix is " +
                     std::to_string(size()) + "x" + std::to_string(size()));
  }
  std::vector<double> next(size());
  kernels::matvec(entries_.data, pop.phi(), next);

  bool projected = false;
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (next[i] >= 0.0) continue;
    if (policy == NegativityPolicy::Strict) {
      if (next[i] < -kStrictNegativeTol * pop.total()) throw InfeasibleError(i, next[i]);
    } else {
      projected = true;
    }
    next[i] = 0.0;
  }

  const double s = kernels::sum(next);
  if (!(s > 0.0)) throw ConstraintError("population collapsed to zero");
  if (s != pop.total()) {
    const double scale = pop.total() / s;
    for (double& v : next) v *= scale;
  }
  return {PopulationVector(std::move(next), pop.total()), projected};
}

EvolutionMatrix::StepResult step(const PopulationVector& pop, const EvolutionMatrix& m, NegativityPolicy policy) {
  return m.apply(pop, policy);
}

Trajectory evolve(const PopulationVector& pop, const EvolutionMatrix& m, std::size_t steps, NegativityPolicy policy) {
  Trajectory traj;
  traj.states.reserve(steps + 1);
  traj.states.push_back(pop);
  for (std::size_t t = 1; t <= steps; ++t) {
    try {
      auto r = m.apply(traj.states.back(), policy);
      traj.negativity_events += r.projected ? 1 : 0;
      traj.states.push_back(std::move(r.population));
    } catch (const InfeasibleError& e) {
      throw InfeasibleError(e.species(), e.value(), t);
    }
  }
  return traj;
}

void ConvergenceOptions::validate() const {
  if (!(winner_threshold > 0.5) || winner_threshold > 1.0) {
    throw InputError("winner threshold must lie in (0.5, 1]");
  }
  if (!(stationarity_tol >= 0.0)) throw InputError("stationarity tolerance must be non-negative");
  if (max_steps < 1) throw InputError("max_steps must be at least 1");
}

ConvergenceReport convergence_time(const PopulationVector& pop, const EvolutionMatrix& m, NegativityPolicy policy,
                                   const ConvergenceOptions& options) {
  options.validate();
  if (pop.size() != m.size()) throw ShapeError("population and matrix sizes differ");

  ConvergenceReport report;
  const double total = pop.total();
  auto check_winner = [&](const PopulationVector& p, std::size_t t) {
    if (report.steps_to_winner) return;
    const auto phi = p.phi();
    const auto it = std::max_element(phi.begin(), phi.end());
    if (*it / total >= options.winner_threshold) {
      report.steps_to_winner = t;
      report.winner = static_cast<std::size_t>(it - phi.begin());
    }
  };

  PopulationVector current = pop;
  check_winner(current, 0);
  for (std::size_t t = 1; t <= options.max_steps; ++t) {
    EvolutionMatrix::StepResult r = [&] {
      try {
        return m.apply(current, policy);
      } catch (const InfeasibleError& e) {
        throw InfeasibleError(e.species(), e.value(), t);
      }
    }();
    report.negativity_events += r.projected ? 1 : 0;
    report.steps_run = t;

    double diff = 0.0;
    for (std::size_t i = 0; i < current.size(); ++i) diff += std::abs(r.population[i] - current[i]);
    if (!report.stationarity_steps && diff / total <= options.stationarity_tol) report.stationarity_steps = t;

    const bool fixed_point = r.population == current;
    current = std::move(r.population);
    check_winner(current, t);
    if (report.steps_to_winner && report.stationarity_steps) break;
    if (fixed_point) break;
  }
  return report;
}

std::vector<SpeedupRow> speedup_experiment(const EvolutionMatrix& base, const DenseMatrix& perturbation,
                                           std::span<const double> lambdas, const PopulationVector& pop,
                                           NegativityPolicy policy, const ConvergenceOptions& options) {
  if (base.mode() != MatrixMode::Stochastic) throw ConstraintError("speed-up baseline must be a stochastic matrix");
  if (perturbation.n != base.size()) throw ShapeError("perturbation and base matrix sizes differ");
  check_column_sums(perturbation, 0.0);
  options.validate();

  std::vector<double> sorted(lambdas.begin(), lambdas.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<SpeedupRow> rows(sorted.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(sorted.size()); ++k) {
    SpeedupRow& row = rows[static_cast<std::size_t>(k)];
    row.lambda = sorted[static_cast<std::size_t>(k)];
    try {
      DenseMatrix entries = base.entries();
      for (std::size_t i = 0; i < entries.data.size(); ++i) entries.data[i] += row.lambda * perturbation.data[i];
      const EvolutionMatrix m(std::move(entries), MatrixMode::Signed);
      row.report = convergence_time(pop, m, policy, options);
    } catch (const std::exception& e) {
      row.feasible = false;
      row.note = e.what();
    }
  }
  return rows;
}

std::optional<double> measure_convergence_rate(const EvolutionMatrix& m, const PopulationVector& pop,
                                               std::size_t window) {
  if (pop.size() != m.size()) throw ShapeError("population and matrix sizes differ");
  if (window < 4) throw InputError("rate window must be at least 4 steps");
  const std::size_t n = m.size();
  const auto& entries = m.entries().data;

  std::vector<double> next(n);
  kernels::matvec(entries, pop.phi(), next);
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = next[i] - pop[i];

  auto renormalise = [&](std::vector<double>& v) -> std::optional<double> {
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);
    double l1 = 0.0;
    for (double& x : v) {
      x -= mean;
      l1 += std::abs(x);
    }
    if (!(l1 > 0.0) || !std::isfinite(l1)) return std::nullopt;
    for (double& x : v) x /= l1;
    return l1;
  };
  if (!renormalise(d)) return std::nullopt;

  // log |d(t)|_1 up to the constant log |d(0)|_1.
  std::vector<double> log_norm(window + 1, 0.0);
  for (std::size_t t = 1; t <= window; ++t) {
    kernels::matvec(entries, d, next);
    const auto l1 = renormalise(next);
    if (!l1) return 0.0;  // increments annihilated exactly: instantaneous convergence
    log_norm[t] = log_norm[t - 1] + std::log(*l1);
    d.swap(next);
  }

  const std::size_t start = window / 2;
  const double count = static_cast<double>(window + 1 - start);
  double mean_t = 0.0, mean_y = 0.0;
  for (std::size_t t = start; t <= window; ++t) {
    mean_t += static_cast<double>(t);
    mean_y += log_norm[t];
  }
  mean_t /= count;
  mean_y /= count;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t t = start; t <= window; ++t) {
    const double dt = static_cast<double>(t) - mean_t;
    sxy += dt * (log_norm[t] - mean_y);
    sxx += dt * dt;
  }
  return std::exp(sxy / sxx);
}

}  // namespace lifecode::evolution

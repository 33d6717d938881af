#include "lifecode/kernels.hpp"

#include <array>
#include <cassert>
#include <cstdint>

namespace lifecode::kernels {

namespace serial {

double sum(std::span<const double> values) {
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

void reflect_about_mean(std::span<double> amplitudes) {
  if (amplitudes.empty()) return;
  const double twice_mean = 2.0 * sum(amplitudes) / static_cast<double>(amplitudes.size());
  for (double& a : amplitudes) a = twice_mean - a;
}

void matvec(std::span<const double> matrix, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  assert(matrix.size() == n * n && y.size() == n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = matrix.data() + i * n;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

}  // namespace serial

double sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < kParallelThreshold) return serial::sum(values);

  std::array<double, kSumBlocks> partial{};
  const std::size_t block = (n + kSumBlocks - 1) / kSumBlocks;
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(kSumBlocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * block;
    const std::size_t hi = lo + block < n ? lo + block : n;
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += values[i];
    partial[static_cast<std::size_t>(b)] = acc;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

void reflect_about_mean(std::span<double> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n < kParallelThreshold) {
    serial::reflect_about_mean(amplitudes);
    return;
  }
  const double twice_mean = 2.0 * sum(amplitudes) / static_cast<double>(n);
  double* a = amplitudes.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) a[i] = twice_mean - a[i];
}

void matvec(std::span<const double> matrix, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  assert(matrix.size() == n * n && y.size() == n);
  if (n * n < kParallelThreshold) {
    serial::matvec(matrix, x, y);
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const double* row = matrix.data() + static_cast<std::size_t>(i) * n;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[static_cast<std::size_t>(i)] = acc;
  }
}

}  // namespace lifecode::kernels

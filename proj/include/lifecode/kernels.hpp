#pragma once

// Data-parallel inner loops shared by the simulation modules.
//
// Each kernel has an OpenMP version in `lifecode::kernels` and a plain
// serial version in `lifecode::kernels::serial`. The serial versions are the
// reference the tests and benchmarks compare against. Parallel versions fall
// back to the serial path below `kParallelThreshold` elements.

#include <cstddef>
#include <span>

namespace lifecode::kernels {

inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

// Number of fixed blocks used by `sum`. Blocks are combined in index order,
// so the result depends only on the input, never on the thread count.
inline constexpr std::size_t kSumBlocks = 64;

double sum(std::span<const double> values);

/// a[i] <- 2 * mean(a) - a[i]
void reflect_about_mean(std::span<double> amplitudes);

/// y <- M x for a dense row-major n x n matrix. Rows are independent, so the
/// parallel result is bit-identical to the serial one.
void matvec(std::span<const double> matrix, std::span<const double> x, std::span<double> y);

namespace serial {

double sum(std::span<const double> values);
void reflect_about_mean(std::span<double> amplitudes);
void matvec(std::span<const double> matrix, std::span<const double> x, std::span<double> y);

}  // namespace serial

}  // namespace lifecode::kernels

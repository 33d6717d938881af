#include <gtest/gtest.h>
#include <omp.h>

#include <numeric>
#include <random>
#include <vector>

#include "lifecode/kernels.hpp"

namespace lk = lifecode::kernels;

namespace {

std::vector<double> random_values(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

}  // namespace

namespace {

// Runs f with the given OpenMP thread count, restoring the previous one.
template <class F>
auto with_threads(int threads, F f) {
  const int previous = omp_get_max_threads();
  omp_set_num_threads(threads);
  auto out = f();
  omp_set_num_threads(previous);
  return out;
}

}  // namespace

TEST(Kernels, SumAgreesWithSerial) {
  for (std::size_t n : {0u, 1u, 7u, 1000u, 1u << 15, (1u << 17) + 3}) {
    const auto v = random_values(n, 11 + n);
    EXPECT_NEAR(lk::sum(v), lk::serial::sum(v), 1e-10) << "n=" << n;
    EXPECT_NEAR(lk::sum(v), std::accumulate(v.begin(), v.end(), 0.0), 1e-10);
  }
  // Small inputs take the serial path exactly.
  const auto small = random_values(100, 1);
  EXPECT_EQ(lk::sum(small), lk::serial::sum(small));
}

TEST(Kernels, SumIsIndependentOfThreadCount) {
  const auto v = random_values((1u << 18) + 17, 21);
  const double one = with_threads(1, [&] { return lk::sum(v); });
  for (int t : {2, 3, 8}) EXPECT_EQ(with_threads(t, [&] { return lk::sum(v); }), one) << t << " threads";
}

TEST(Kernels, ReflectionAgreesWithSerial) {
  for (std::size_t n : {1u, 4u, 1u << 16}) {
    auto a = random_values(n, 3);
    auto b = a;
    lk::reflect_about_mean(a);
    lk::serial::reflect_about_mean(b);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(a[i], b[i], 1e-14);
  }
  const auto v = random_values(1u << 16, 4);
  const auto one = with_threads(1, [&] { auto c = v; lk::reflect_about_mean(c); return c; });
  const auto four = with_threads(4, [&] { auto c = v; lk::reflect_about_mean(c); return c; });
  EXPECT_EQ(one, four);
}

TEST(Kernels, ReflectionIsAnInvolution) {
  auto a = random_values(257, 5);
  const auto original = a;
  lk::reflect_about_mean(a);
  lk::reflect_about_mean(a);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], original[i], 1e-14);
}

TEST(Kernels, MatvecMatchesSerialAndHandProduct) {
  const std::vector<double> m{1, 2, 3, 4};
  const std::vector<double> x{1, -1};
  std::vector<double> y(2);
  lk::matvec(m, x, y);
  EXPECT_EQ(y, (std::vector<double>{-1, -1}));

  const std::size_t n = 200;
  const auto big = random_values(n * n, 9);
  const auto v = random_values(n, 10);
  std::vector<double> p(n), s(n);
  lk::matvec(big, v, p);
  lk::serial::matvec(big, v, s);
  EXPECT_EQ(p, s);
}

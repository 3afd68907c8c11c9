#include "sumsym/allocation.hpp"
#include "sumsym/circuit.hpp"
#include "sumsym/oracle.hpp"

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

namespace {

using sumsym::Integer;
using sumsym::Rational;
using sumsym::SquareMatrix;

// Sum of `terms` random circuits on n indices with weights in [1, 20].
SquareMatrix<Integer> random_sum_symmetric(std::size_t n, int terms, std::mt19937_64& rng) {
  SquareMatrix<Integer> m(n);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (int t = 0; t < terms; ++t) {
    std::shuffle(idx.begin(), idx.end(), rng);
    const auto len = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    const Integer w(std::uniform_int_distribution<long>(1, 20)(rng));
    for (std::size_t j = 0; j < len; ++j) m(idx[j], idx[(j + 1) % len]) += w;
  }
  return m;
}

SquareMatrix<Integer> random_doubly_balanced(std::size_t n, int terms, std::mt19937_64& rng) {
  SquareMatrix<Integer> m(n);
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  for (int t = 0; t < terms; ++t) {
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const Integer w(std::uniform_int_distribution<long>(1, 20)(rng));
    for (std::size_t i = 0; i < n; ++i) m(i, sigma[i]) += w;
  }
  return m;
}

sumsym::Scenario random_scenario(std::size_t items, std::size_t classes, std::mt19937_64& rng) {
  sumsym::Scenario sc;
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> nonneg(0, 50);
  std::uniform_int_distribution<long> den(1, 9);
  for (std::size_t x = 0; x < items; ++x) {
    sc.items.push_back({"x" + std::to_string(x), Rational(Integer(nonneg(rng)), Integer(den(rng)))});
  }
  std::vector<Rational> potencies;
  for (std::size_t i = 0; i < classes; ++i) potencies.push_back(Rational(Integer(num(rng)), Integer(den(rng))));
  std::sort(potencies.begin(), potencies.end());
  for (std::size_t i = 0; i < classes; ++i) {
    const std::size_t quota = items / classes + (i < items % classes ? 1 : 0);
    sc.treatments.push_back({potencies[i], quota});
  }
  return sc;
}

void BM_CircuitDecompose(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_sum_symmetric(n, static_cast<int>(2 * n), rng);
  for (auto _ : state) benchmark::DoNotOptimize(sumsym::circuit_decompose(m));
}
BENCHMARK(BM_CircuitDecompose)->RangeMultiplier(2)->Range(4, 64);

void BM_BirkhoffDecompose(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_doubly_balanced(n, static_cast<int>(n), rng);
  for (auto _ : state) benchmark::DoNotOptimize(sumsym::birkhoff_decompose(m));
}
BENCHMARK(BM_BirkhoffDecompose)->RangeMultiplier(2)->Range(4, 64);

void BM_OptimalPartition(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto sc = random_scenario(static_cast<std::size_t>(state.range(0)), 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(sumsym::optimal_partition(sc));
}
BENCHMARK(BM_OptimalPartition)->RangeMultiplier(4)->Range(16, 4096);

void BM_BruteForceBest(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto sc = random_scenario(static_cast<std::size_t>(state.range(0)), 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(sumsym::brute_force_best(sc));
}
BENCHMARK(BM_BruteForceBest)->DenseRange(3, 9, 3);

}  // namespace

BENCHMARK_MAIN();

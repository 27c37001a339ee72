#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fairdiv/deterministic_solver.hpp"
#include "fairdiv/fractional_solver.hpp"
#include "fairdiv/lottery.hpp"
#include "fairdiv/properties.hpp"

namespace {

fairdiv::Instance random_instance(int num_agents, int num_goods, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<std::vector<int>> rows(num_agents, std::vector<int>(num_goods));
  for (auto& row : rows)
    for (int& v : row) v = bit(rng);
  return fairdiv::Instance(rows);
}

void BM_mnw_tie(benchmark::State& state) {
  const auto instance =
      random_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdiv::mnw_tie(instance));
  }
}

void BM_fractional_mnw(benchmark::State& state) {
  const auto instance =
      random_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdiv::fractional_mnw(instance));
  }
}

void BM_decompose(benchmark::State& state) {
  const auto instance =
      random_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  const auto frac = fairdiv::fractional_mnw(instance).shares;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdiv::decompose(instance, frac));
  }
}

void BM_mnw_certificate(benchmark::State& state) {
  const auto instance =
      random_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  const auto alloc = fairdiv::mnw_tie(instance);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdiv::is_mnw(instance, alloc));
  }
}

}  // namespace

BENCHMARK(BM_mnw_tie)->Args({5, 10})->Args({10, 30})->Args({20, 60})->Args({40, 120});
BENCHMARK(BM_fractional_mnw)->Args({5, 10})->Args({10, 30})->Args({20, 60});
BENCHMARK(BM_decompose)->Args({5, 10})->Args({10, 30})->Args({20, 60});
BENCHMARK(BM_mnw_certificate)->Args({10, 30})->Args({40, 120});

BENCHMARK_MAIN();

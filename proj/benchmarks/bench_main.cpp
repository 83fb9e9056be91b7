#include <benchmark/benchmark.h>

#include <random>

#include "fairalloc/contiguous.hpp"
#include "fairalloc/fairness.hpp"
#include "fairalloc/generators.hpp"
#include "fairalloc/noncontiguous.hpp"
#include "fairalloc/simulate.hpp"

using namespace fairalloc;

namespace {

std::vector<BigInt> random_values(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BigInt> out;
  for (std::size_t g = 0; g < m; ++g) out.push_back(BigInt(1 + rng() % 9));
  return out;
}

void BM_leximin2_dp(benchmark::State& state) {
  auto values = random_values(static_cast<std::size_t>(state.range(1)), 7);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(leximin2_dp(values, n).allocation);
}
BENCHMARK(BM_leximin2_dp)->Args({2, 50})->Args({4, 100})->Args({6, 200});

void BM_propa_pointer_stream(benchmark::State& state) {
  ValuationProfile v = gen_identical_ones(static_cast<int>(state.range(0)),
                                          static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    PropaPointerAllocator p;
    RunResult r = run_online(p, v);
    benchmark::DoNotOptimize(r.ledger.cumulative);
  }
}
BENCHMARK(BM_propa_pointer_stream)->Args({2, 200})->Args({6, 500});

void BM_layer_updating_stream(benchmark::State& state) {
  RandomParams params;
  params.L = 0;
  params.R = 9;
  ValuationProfile v = gen_random(RandomFamily::Uniform, static_cast<int>(state.range(0)),
                                  static_cast<std::size_t>(state.range(1)), params, 99);
  for (auto _ : state) {
    LayerUpdatingAllocator layer;
    RunResult r = run_online(layer, v);
    benchmark::DoNotOptimize(r.ledger.cumulative);
  }
}
BENCHMARK(BM_layer_updating_stream)->Args({4, 100})->Args({8, 200});

void BM_is_ef1(benchmark::State& state) {
  RandomParams params;
  params.L = -9;
  params.R = 9;
  int n = static_cast<int>(state.range(0));
  std::size_t t = static_cast<std::size_t>(state.range(1));
  ValuationProfile v = gen_random(RandomFamily::Mixed, n, t, params, 5);
  std::mt19937_64 rng(6);
  Allocation a;
  for (std::size_t g = 0; g < t; ++g) a.owner.push_back(1 + static_cast<int>(rng() % n));
  for (auto _ : state) benchmark::DoNotOptimize(is_ef1(a, v).satisfied);
}
BENCHMARK(BM_is_ef1)->Args({2, 100})->Args({6, 500});

}  // namespace

BENCHMARK_MAIN();

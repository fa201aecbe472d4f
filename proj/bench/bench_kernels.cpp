#include <benchmark/benchmark.h>

#include "obtuse/enumerate.hpp"
#include "obtuse/jacobsthal.hpp"
#include "obtuse/searchverify.hpp"

using namespace obtuse;

namespace {

EnumerateOptions sweep(std::uint64_t n_max, int workers) {
  EnumerateOptions opts;
  opts.n_max = n_max;
  opts.min_region = Region::obtuse;
  opts.workers = workers;
  return opts;
}

void BM_EnumerateReference(benchmark::State& state) {
  const auto opts = sweep(static_cast<std::uint64_t>(state.range(0)), 1);
  for (auto _ : state) {
    std::uint64_t count = 0;
    reference::enumerate(opts, [&](const EnumeratedTriple&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto opts = sweep(static_cast<std::uint64_t>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    std::uint64_t count = 0;
    enumerate(opts, [&](const EnumeratedTriple&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}

void BM_CoverageReference(benchmark::State& state) {
  const auto cfg = search::default_config(state.range(0) == 0 ? search::Regime::A : search::Regime::B);
  for (auto _ : state) benchmark::DoNotOptimize(search::reference::coverage_check(cfg));
}

void BM_CoverageParallel(benchmark::State& state) {
  const auto cfg = search::default_config(state.range(0) == 0 ? search::Regime::A : search::Regime::B);
  for (auto _ : state) benchmark::DoNotOptimize(search::coverage_check(cfg, static_cast<int>(state.range(1))));
}

void BM_JacobsthalReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::jacobsthal_table(static_cast<std::uint64_t>(state.range(0))));
}

void BM_JacobsthalParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        jacobsthal_table(static_cast<std::uint64_t>(state.range(0)), static_cast<int>(state.range(1))));
  }
}

void BM_BetaReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search::reference::beta_search(4, 10'000));
}

void BM_BetaParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search::beta_search(4, 10'000, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_EnumerateReference)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Args({200, 1})->Args({200, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageReference)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageParallel)->Args({0, 4})->Args({1, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobsthalReference)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobsthalParallel)->Args({100'000, 1})->Args({100'000, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BetaReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BetaParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

// OpenMP kernels against their serial references. Run with
// --benchmark_filter=<kernel> and OMP_NUM_THREADS to compare thread counts.

#include <benchmark/benchmark.h>

#include "abelstrata/bn_linear.hpp"
#include "abelstrata/multidegree.hpp"
#include "abelstrata/stratification.hpp"
#include "abelstrata/verify.hpp"

using namespace abelstrata;

namespace {

// Four vertices of genus 1 joined in a cycle with two chords: genus 7.
DualGraph wheel() {
  return DualGraph({1, 1, 1, 1},
                   {Edge{0, 1}, Edge{1, 2}, Edge{2, 3}, Edge{3, 0}, Edge{0, 2}, Edge{1, 3}});
}

void multidegrees_parallel(benchmark::State& state) {
  const BalanceChecker checker(wheel());
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_multidegrees(checker, static_cast<int>(state.range(0)),
                                                    DegreeFilter::balanced));
  }
}

void multidegrees_serial(benchmark::State& state) {
  const BalanceChecker checker(wheel());
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::enumerate_multidegrees(checker, static_cast<int>(state.range(0)),
                                                               DegreeFilter::balanced));
  }
}

void strata_parallel(benchmark::State& state) {
  const auto x = binary_curve(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_strata(x, 2));
}

void strata_serial(benchmark::State& state) {
  const auto x = binary_curve(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_strata(x, 2));
}

void probe_parallel(benchmark::State& state) {
  const auto m = RationalCurveModel::random(binary_curve(3), PrimeField(static_cast<std::uint64_t>(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_W_probe(m, Multidegree({1, 1})));
}

void probe_serial(benchmark::State& state) {
  const auto m = RationalCurveModel::random(binary_curve(3), PrimeField(static_cast<std::uint64_t>(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(reference::exhaustive_W_probe(m, Multidegree({1, 1})));
}

void generic_parallel(benchmark::State& state) {
  const auto m = RationalCurveModel::random(binary_curve(6), PrimeField(1000003), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        generic_h0_estimate(m, Multidegree({3, 3}), static_cast<std::uint64_t>(state.range(0)), 7));
  }
}

void generic_serial(benchmark::State& state) {
  const auto m = RationalCurveModel::random(binary_curve(6), PrimeField(1000003), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        reference::generic_h0_estimate(m, Multidegree({3, 3}), static_cast<std::uint64_t>(state.range(0)), 7));
  }
}

}  // namespace

BENCHMARK(multidegrees_parallel)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(multidegrees_serial)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(strata_parallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(strata_serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(probe_parallel)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(probe_serial)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(generic_parallel)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(generic_serial)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include "congruent/theory.hpp"

#include <benchmark/benchmark.h>

using namespace congruent;
using namespace congruent::theory;

static void BM_alpha_detector(benchmark::State& state) {
    const BigInt p = static_cast<long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(alpha_pm_pythagorean(p, 1000));
}
// 41 succeeds at once; 17 exhausts the bound.
BENCHMARK(BM_alpha_detector)->Arg(41)->Arg(17)->Unit(benchmark::kMillisecond);

static void BM_beta_detector(benchmark::State& state) {
    const BigInt p = static_cast<long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(beta_pythagorean(p, 1000));
}
BENCHMARK(BM_beta_detector)->Arg(137)->Arg(17)->Unit(benchmark::kMillisecond);

static void BM_rank2_criterion(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(rank2_criterion(BigInt(41), 1000));
}
BENCHMARK(BM_rank2_criterion);

static void BM_triples_square_diff(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(pyth_triples_square_diff(state.range(0)));
}
BENCHMARK(BM_triples_square_diff)->Arg(20)->Arg(60);

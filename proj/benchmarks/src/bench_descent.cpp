#include "congruent/descent.hpp"
#include "congruent/local.hpp"
#include "congruent/search.hpp"

#include <benchmark/benchmark.h>

using namespace congruent;
using namespace congruent::descent;

// Full two-isogeny descent (both curves) for n.
static void BM_rank_bounds(benchmark::State& state) {
    const Curve E = congruent_curve(BigInt(static_cast<long>(state.range(0))));
    for (auto _ : state) {
        auto b = rank_bounds(compute_image(E), compute_image(isogenous_curve(E)));
        benchmark::DoNotOptimize(b.upper);
    }
}
BENCHMARK(BM_rank_bounds)->Arg(5)->Arg(41)->Arg(157)->Arg(2605)->Unit(benchmark::kMillisecond);

// Plain search over an insoluble-at-bound space: the cost is the full box.
static void BM_plain_search(benchmark::State& state) {
    const HomogeneousSpace S{3, 0, 12};
    for (auto _ : state) benchmark::DoNotOptimize(search::plain_search(S, state.range(0)));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_plain_search)->RangeMultiplier(4)->Range(250, 4000)->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMillisecond);

// Two-cover search that has to reach parameters in the thousands (n = 263).
static void BM_lifted_search(benchmark::State& state) {
    const HomogeneousSpace S{2, 0, 2 * 263 * 263};
    for (auto _ : state) benchmark::DoNotOptimize(search::lifted_search(S, 2000));
}
BENCHMARK(BM_lifted_search)->Unit(benchmark::kMillisecond);

static void BM_padic_solubility(benchmark::State& state) {
    const HomogeneousSpace S{2, 0, 18};
    for (auto _ : state) benchmark::DoNotOptimize(local::padic_solubility(S, BigInt(2)));
}
BENCHMARK(BM_padic_solubility);

static void BM_residue_scan(benchmark::State& state) {
    const HomogeneousSpace S{2, 0, 8 * 49};
    for (auto _ : state) benchmark::DoNotOptimize(local_obstruction(S, {8, 16, 32, 7, 49}));
}
BENCHMARK(BM_residue_scan);

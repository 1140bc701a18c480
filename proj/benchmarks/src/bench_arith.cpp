#include "congruent/arith.hpp"

#include <benchmark/benchmark.h>

using namespace congruent::arith;

static void BM_legendre(benchmark::State& state) {
    const BigInt p = 1000003;
    long a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(legendre(BigInt(a), p));
        a = a % 1000000 + 7;
    }
}
BENCHMARK(BM_legendre);

static void BM_is_prime(benchmark::State& state) {
    std::uint64_t n = 1'000'000'000'000ULL;
    for (auto _ : state) benchmark::DoNotOptimize(is_prime(n++));
}
BENCHMARK(BM_is_prime);

static void BM_squarefree_decompose(benchmark::State& state) {
    const BigInt base = BigInt(1) << state.range(0);
    BigInt n = base + 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(squarefree_decompose(n));
        n += 2;
    }
}
BENCHMARK(BM_squarefree_decompose)->Arg(20)->Arg(40)->Arg(60);

static void BM_sum_two_squares(benchmark::State& state) {
    const BigInt p("1000000000000000000117");  // prime, 1 mod 4
    for (auto _ : state) benchmark::DoNotOptimize(sum_two_squares(p));
}
BENCHMARK(BM_sum_two_squares);

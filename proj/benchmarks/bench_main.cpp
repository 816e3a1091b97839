#include "froberg/criterion.hpp"
#include "froberg/gfp_linalg.hpp"
#include "froberg/series.hpp"
#include "froberg/verifier.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace froberg;

static void BM_Rank(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    PrimeFieldMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) m.set(r, c, rng());
    }
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

static void BM_QuotientSeries(benchmark::State& state) {
    const auto d = static_cast<std::uint32_t>(state.range(0));
    const auto z = dim_graded_u64(5, d) / 2;
    for (auto _ : state) benchmark::DoNotOptimize(froberg_quotient_series(5, d, z, 2 * d + 4));
}
BENCHMARK(BM_QuotientSeries)->Arg(5)->Arg(10)->Arg(20);

static void BM_Coverage(benchmark::State& state) {
    const auto d = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(covered_z_set(5, d));
}
BENCHMARK(BM_Coverage)->Arg(10)->Arg(40)->Arg(80);

static void BM_Verify(benchmark::State& state) {
    SamplingConfig cfg;
    cfg.trials = 1;
    const auto z = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_against_conjecture(3, 3, z, 8, cfg));
}
BENCHMARK(BM_Verify)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "sgi/enumerate.hpp"
#include "sgi/inertia.hpp"
#include "sgi/random.hpp"
#include "sgi/structure.hpp"
#include "sgi/suite.hpp"

namespace {

sgi::SignedGraph fixed_random_graph(int n) {
    sgi::SplitMix64 rng(0xb5a7 + n);
    return random_signed_graph(rng, n);
}

void BM_InertiaByCongruence(benchmark::State& state) {
    const auto g = fixed_random_graph(static_cast<int>(state.range(0)));
    const auto a = sgi::adjacency_matrix(g);
    for (auto _ : state) benchmark::DoNotOptimize(sgi::inertia_by_congruence(a));
}
BENCHMARK(BM_InertiaByCongruence)->DenseRange(4, 10, 2);

void BM_CharPolyOracle(benchmark::State& state) {
    const auto g = fixed_random_graph(static_cast<int>(state.range(0)));
    const auto a = sgi::adjacency_matrix(g);
    for (auto _ : state) benchmark::DoNotOptimize(sgi::inertia_from_char_poly(sgi::char_poly(a)));
}
BENCHMARK(BM_CharPolyOracle)->DenseRange(4, 10, 2);

void BM_EnumerateClasses(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sgi::enumerate_underlying_graphs(n, true));
}
BENCHMARK(BM_EnumerateClasses)->DenseRange(5, 8, 1)->Unit(benchmark::kMillisecond);

void BM_BlockDecomposition(benchmark::State& state) {
    const auto g = fixed_random_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sgi::block_decomposition(g));
}
BENCHMARK(BM_BlockDecomposition)->DenseRange(4, 10, 2);

void BM_VerificationSuite(benchmark::State& state) {
    sgi::SuiteOptions options;
    options.union_samples = 0;
    options.lemma_stride = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sgi::run_suite(static_cast<int>(state.range(0)), options));
}
BENCHMARK(BM_VerificationSuite)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

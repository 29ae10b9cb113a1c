#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "onesided/corpus.hpp"
#include "onesided/maximal.hpp"
#include "onesided/operator_matrix.hpp"
#include "onesided/sparse.hpp"
#include "onesided/testing.hpp"
#include "onesided/weight.hpp"

using namespace onesided;

namespace {

Weight bench_weight(const Grid& g) {
    return family_generate(WeightKind::random_dyadic, {.beta = 4.0}, 1, g);
}

void BM_spectral_norm(benchmark::State& state) {
    Grid g(0.0, 1.0, static_cast<int>(state.range(0)));
    auto T = discretize(causal_hilbert(), g);
    Weight w = bench_weight(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(weighted_operator_norm(T, w, NormMode::L2w));
}

void BM_maximal_sweep(benchmark::State& state) {
    Grid g(0.0, 1.0, static_cast<int>(state.range(0)));
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> f(static_cast<size_t>(g.n()));
    for (auto& v : f) v = unif(rng);
    CellSpan I0{0, g.n()};
    for (auto _ : state) benchmark::DoNotOptimize(max_up(f, I0));
}

void BM_characteristic_scan(benchmark::State& state) {
    Grid g(0.0, 1.0, static_cast<int>(state.range(0)));
    Weight w = bench_weight(g);
    for (auto _ : state) benchmark::DoNotOptimize(ap_up_characteristic(w, 2.0));
}

void BM_global_testing(benchmark::State& state) {
    Grid g(0.0, 1.0, static_cast<int>(state.range(0)));
    auto T = discretize(causal_hilbert(), g);
    auto mp = MeasurePair::from_weight(bench_weight(g));
    for (auto _ : state)
        benchmark::DoNotOptimize(local_testing(T, mp, TestScope::global));
}

void BM_sparse_build(benchmark::State& state) {
    Grid g(0.0, 1.0, static_cast<int>(state.range(0)));
    Weight w = family_generate(WeightKind::random_dyadic, {.beta = 8.0}, 11, g);
    auto mp = MeasurePair::from_weight(w);
    DyadicInterval root{g.m, 0};
    double K = empirical_pivotal_constant(g, root, mp, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(build_sparse(g, root, K, mp, 1.0));
}

}  // namespace

BENCHMARK(BM_spectral_norm)->DenseRange(6, 9);
BENCHMARK(BM_maximal_sweep)->DenseRange(8, 12);
BENCHMARK(BM_characteristic_scan)->DenseRange(8, 12);
BENCHMARK(BM_global_testing)->DenseRange(6, 9);
BENCHMARK(BM_sparse_build)->DenseRange(6, 9);

BENCHMARK_MAIN();

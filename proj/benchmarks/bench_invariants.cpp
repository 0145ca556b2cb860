#include <benchmark/benchmark.h>

#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"
#include "nakayama/psi.hpp"
#include "nakayama/stratify.hpp"
#include "nakayama/verify.hpp"

using namespace nakayama;

namespace {

KupischSeries staircase(int n) {
    std::vector<int> lens(static_cast<size_t>(n), 2);
    lens.back() = 3;
    return cyclic_series(lens);
}

void EnumerateCyclic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long count = 0;
        enumerate_series(n, 3 * n, Kind::cyclic, [&](const KupischSeries&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(EnumerateCyclic)->Arg(4)->Arg(5)->Arg(6);

void DimTablesStaircase(benchmark::State& state) {
    auto ks = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto t = dim_tables(ks);
        benchmark::DoNotOptimize(t.findim);
    }
}
BENCHMARK(DimTablesStaircase)->Arg(8)->Arg(16)->Arg(32);

void PsiProfileBench(benchmark::State& state) {
    auto ks = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto p = psi_profile(ks);
        benchmark::DoNotOptimize(p.d);
    }
}
BENCHMARK(PsiProfileBench)->Arg(8)->Arg(32);

void ClassifyFastPath(benchmark::State& state) {
    auto ks = cyclic_series({7, 11, 10, 9, 8});
    for (auto _ : state) {
        auto c = classify(ks);
        benchmark::DoNotOptimize(c.klass);
    }
}
BENCHMARK(ClassifyFastPath);

void BruteForceSearch(benchmark::State& state) {
    auto ks = cyclic_series({7, 11, 10, 9, 8});
    for (auto _ : state) {
        auto w = ss_search(ks);
        benchmark::DoNotOptimize(w.has_value());
    }
}
BENCHMARK(BruteForceSearch);

void BoundsSweep(benchmark::State& state) {
    SuiteSpec spec;
    spec.n_min = spec.n_max = static_cast<int>(state.range(0));
    spec.max_len_3n = true;
    spec.suites = {"bounds"};
    for (auto _ : state) {
        long rows = 0;
        sweep_properties(spec, [&](const PropertyResult&) { ++rows; });
        benchmark::DoNotOptimize(rows);
    }
}
BENCHMARK(BoundsSweep)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();

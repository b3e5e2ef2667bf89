// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to vary the pool.

#include <numeric>

#include <benchmark/benchmark.h>

#include "tamedeg/sweep.hpp"

using namespace tamedeg;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_Witnesses(benchmark::State& state)
{
    const auto triples = sorted_triples(3, 24);
    for (auto _ : state) benchmark::DoNotOptimize(check_witnesses(triples, mode(state)));
    state.SetItemsProcessed(state.iterations() * triples.size());
}

void BM_Classify(benchmark::State& state)
{
    std::vector<Triple> triples;
    for (std::uint64_t d3 = 13; d3 <= 400; ++d3) triples.push_back({11, 13, d3});
    for (auto _ : state) benchmark::DoNotOptimize(classify(triples, mode(state)));
    state.SetItemsProcessed(state.iterations() * triples.size());
}

void BM_Reductions(benchmark::State& state)
{
    const auto triples = sorted_triples(3, 20);
    for (auto _ : state) benchmark::DoNotOptimize(check_reductions(triples, mode(state)));
    state.SetItemsProcessed(state.iterations() * triples.size());
}

void BM_Fuzz(benchmark::State& state)
{
    std::vector<std::uint64_t> seeds(48);
    std::iota(seeds.begin(), seeds.end(), 1);
    for (auto _ : state) benchmark::DoNotOptimize(fuzz_words(seeds, 3, 4, 3, mode(state)));
    state.SetItemsProcessed(state.iterations() * seeds.size());
}

void BM_ExceptionTables(benchmark::State& state)
{
    std::vector<std::array<std::uint64_t, 2>> pairs;
    for (std::uint64_t b = 101; b <= 401; ++b)
        if (b % 3) pairs.push_back({3, b});
    for (auto _ : state) benchmark::DoNotOptimize(exception_tables(pairs, mode(state)));
    state.SetItemsProcessed(state.iterations() * pairs.size());
}

}  // namespace

BENCHMARK(BM_Witnesses)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reductions)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fuzz)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExceptionTables)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

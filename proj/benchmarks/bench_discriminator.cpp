#include "disclab/discriminator.hpp"

#include <benchmark/benchmark.h>

using namespace disclab;

namespace {

void BM_IncrementalTable(benchmark::State& state) {
    const QuadSeq q = QuadSeq::triangular();
    for (auto _ : state) benchmark::DoNotOptimize(discriminator_table(q, state.range(0)));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IncrementalTable)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_OracleTable(benchmark::State& state) {
    const QuadSeq q = QuadSeq::triangular();
    for (auto _ : state) benchmark::DoNotOptimize(oracle_table(q, state.range(0)));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleTable)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

// Sequences that leave p^k early stop at the first divergence.
void BM_CompareDiverging(benchmark::State& state) {
    const QuadSeq q = QuadSeq::integer(3, 75);
    for (auto _ : state) benchmark::DoNotOptimize(compare_with_prime_power(q, 3, 2187));
}
BENCHMARK(BM_CompareDiverging);

void BM_CompareMatching(benchmark::State& state) {
    const QuadSeq q = QuadSeq::integer(3, -1);
    for (auto _ : state) benchmark::DoNotOptimize(compare_with_prime_power(q, 3, state.range(0)));
}
BENCHMARK(BM_CompareMatching)->Arg(243)->Arg(2187);

} // namespace

BENCHMARK_MAIN();

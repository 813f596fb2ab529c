#include "disclab/primes.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>

using namespace disclab;

namespace {

void BM_IsPrimeSmall(benchmark::State& state) {
    std::uint64_t n = 1'000'001;
    for (auto _ : state) {
        benchmark::DoNotOptimize(primes::is_prime(n));
        n += 2;
    }
}
BENCHMARK(BM_IsPrimeSmall);

void BM_IsPrimeLarge(benchmark::State& state) {
    std::uint64_t n = 18'446'744'073'709'551'557ULL;  // largest 64-bit prime
    for (auto _ : state) {
        benchmark::DoNotOptimize(primes::is_prime(n));
        n -= 2;
    }
}
BENCHMARK(BM_IsPrimeLarge);

void BM_PrimesInWindow(benchmark::State& state) {
    const auto lo = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(primes::primes_in_window(lo, lo + 100'000));
}
BENCHMARK(BM_PrimesInWindow)->Arg(1'000)->Arg(1'000'000'000)->Arg(1'000'000'000'000);

void BM_DigitPrime(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(primes::find_digit_prime(primes::PrimeSearchSpec::for_leading_max(343, 5, 1)));
}
BENCHMARK(BM_DigitPrime);

} // namespace

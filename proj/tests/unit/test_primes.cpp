#include "doctest.h"

#include "disclab/error.hpp"
#include "disclab/primes.hpp"
#include "oracle.hpp"

#include <random>

using namespace disclab;
using namespace disclab::primes;

TEST_CASE("is_prime agrees with a sieve up to 10^7") {
    constexpr std::size_t kLimit = 10'000'000;
    const std::vector<bool> sieve = oracle::sieve(kLimit);
    std::size_t mismatches = 0;
    for (std::size_t n = 0; n <= kLimit; ++n) mismatches += is_prime(n) != sieve[n];
    CHECK(mismatches == 0);
}

TEST_CASE("is_prime agrees with trial division up to 10^5") {
    for (std::uint64_t n = 0; n <= 100'000; ++n) REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
}

TEST_CASE("is_prime on large and adversarial inputs") {
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ULL));
    CHECK_FALSE(is_prime(3215031751ULL));       // strong pseudoprime to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(3825123056546413051ULL));
    CHECK(is_prime(1'000'000'007ULL));
    CHECK_FALSE(is_prime(1'000'000'007ULL * 998'244'353ULL));
}

TEST_CASE("prime windows are open intervals") {
    CHECK(primes_in_window(6, 9) == std::vector<std::uint64_t>{7});
    CHECK(primes_in_window(18, 27) == std::vector<std::uint64_t>{19, 23});
    CHECK(primes_in_window(7, 8).empty());
    CHECK(primes_in_window(0, 12) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
    CHECK_THROWS_AS(primes_in_window(9, 9), Error);
    const std::uint64_t lo = 999'000'000, hi = 1'001'000'000;
    const auto ps = primes_in_window(lo, hi);
    std::size_t count = 0;
    for (std::uint64_t n = lo + 1; n < hi; ++n) count += is_prime(n);
    CHECK(ps.size() == count);
    for (std::uint64_t p : ps) CHECK(is_prime(p));
}

TEST_CASE("zcounter is the least solution") {
    std::mt19937_64 rng(7);
    int checked = 0;
    while (checked < 300) {
        const std::int64_t p = std::vector<std::int64_t>{3, 5, 7, 11}[rng() % 4];
        const int k = 1 + static_cast<int>(rng() % 3);
        const std::int64_t pk = ipow(p, k);
        if (pk < 5) continue;
        std::int64_t b = static_cast<std::int64_t>(rng() % 201) - 100;
        if (b == 0 || b % p == 0) continue;
        std::int64_t r = mod(-b, pk) + pk * static_cast<std::int64_t>(1 + rng() % 200);
        while (!is_prime(static_cast<std::uint64_t>(r)) || r <= (b < 0 ? -b : b)) r += pk;
        CHECK(zcounter(ZCounterInput(p, k, b, r)) == oracle::least_z(pk, b, r));
        ++checked;
    }
    CHECK_THROWS_AS(ZCounterInput(2, 3, 1, 7), Error);
    CHECK_THROWS_AS(ZCounterInput(5, 1, 5, 109), Error);
    CHECK_THROWS_AS(ZCounterInput(5, 1, 1, 104), Error);
    CHECK_THROWS_AS(ZCounterInput(5, 1, 1, 113), Error);
}

TEST_CASE("digit-constrained prime search") {
    const DigitPrime d = find_digit_prime(PrimeSearchSpec::for_leading_max(5, 4, 1));
    CHECK(d.r == 109);
    CHECK(d.u == 2);
    // r = 4 * 5 + ... : 24 is the only candidate in [20, 25) and it is composite.
    try {
        find_digit_prime(PrimeSearchSpec::for_leading_max(5, 4, 1, 1));
        FAIL("expected SearchExhausted");
    } catch (const SearchExhausted& e) {
        CHECK(e.max_digits() == 1);
    }
    CHECK_THROWS_AS(find_digit_prime(PrimeSearchSpec::for_leading_max(6, 3, 1)), Error);
}

TEST_CASE("counterexample for 5n^2 + n") {
    const QpCounterexample qp = counterexample_qp(5, 1, 1, 1);
    CHECK(qp.prime.r == 109);
    CHECK(qp.ell == 2);
    CHECK(qp.counterexample.n == 26);
    CHECK(qp.counterexample.smaller->verified);
    CHECK(qp.counterexample.smaller->mode == witness::CheckMode::exhaustive);
    CHECK(oracle::discriminates(oracle::prefix(10, 2, 0, 26), 109));
    CHECK(witness::verify(qp.counterexample));
}

TEST_CASE("large counterexamples fall back to the sampled chain") {
    const QpCounterexample qp = counterexample_qp(7, 2, 100, 3);
    CHECK(qp.counterexample.smaller->verified);
    const std::int64_t pairs = qp.counterexample.n * (qp.counterexample.n - 1) / 2;
    if (pairs > kExhaustivePairBudget)
        CHECK(qp.counterexample.smaller->mode == witness::CheckMode::inequality_chain_sampled);
    CHECK(qp.prime.r < ipow(7, qp.ell + 1));
}

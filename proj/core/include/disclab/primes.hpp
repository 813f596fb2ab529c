#pragma once

// Primality, prime windows, and the digit-constrained prime search that
// drives the p >= 3 non-existence construction: a prime r whose leading
// base-p^k digit is p^k - 1 and whose residue mod p^k is -b discriminates
// the first p^l + 1 terms of c(p^k n^2 + b n) while r < p^(l+1).

#include "disclab/witness/types.hpp"

#include <cstdint>
#include <vector>

namespace disclab::primes {

/// Deterministic Miller-Rabin over the first twelve prime bases, exact for
/// every 64-bit input.
bool is_prime(std::uint64_t n);

/// All primes p with lo < p < hi, ascending (segmented sieve).
std::vector<std::uint64_t> primes_in_window(std::uint64_t lo, std::uint64_t hi);

/// Inputs of the least-solution formula for p^k z + b == 0 (mod r).
class ZCounterInput {
public:
    /// Requires p prime >= 3, p^k >= 5, gcd(p, b) == 1, r prime, r > |b|,
    /// and r == -b (mod p^k). Throws ErrorCode::precondition otherwise.
    ZCounterInput(std::int64_t p, int k, std::int64_t b, std::int64_t r);

    std::int64_t p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t r() const noexcept { return r_; }
    std::int64_t base() const noexcept { return base_; }

private:
    std::int64_t p_;
    int k_;
    std::int64_t b_;
    std::int64_t r_;
    std::int64_t base_;
};

/// z = ((p^k - 1) r - b) / p^k, the least z >= 0 with p^k z + b == 0 (mod r).
std::int64_t zcounter(const ZCounterInput& in);

inline constexpr int kDefaultMaxDigits = 8;

struct PrimeSearchSpec {
    std::int64_t base;           // p^k, >= 5
    std::int64_t leading_digit;  // base - 1 for the non-existence construction
    std::int64_t residue;        // required r mod base, coprime to base
    std::int64_t min_value;      // r must exceed this
    int max_digits = kDefaultMaxDigits;

    static PrimeSearchSpec for_leading_max(std::int64_t base, std::int64_t residue,
                                           std::int64_t min_value,
                                           int max_digits = kDefaultMaxDigits);
    void validate() const;
};

struct DigitPrime {
    std::int64_t r;
    int u;  // leading_digit * base^u <= r < (leading_digit + 1) * base^u
};

/// Least prime r > min_value with the given leading digit and residue,
/// scanning the windows u = 0, 1, ..., max_digits in order. Throws
/// SearchExhausted when every window is empty.
DigitPrime find_digit_prime(const PrimeSearchSpec& spec);

enum class Scaling { integer, half };

struct QpCounterexample {
    witness::Counterexample counterexample;
    DigitPrime prime;
    int ell;
    std::int64_t z;  // zcounter for the chosen prime
};

/// Counterexample for c (p^k n^2 + b n) (Scaling::integer) or half of it
/// (Scaling::half, where p^k c and b c must be odd): finds r, sets
/// l = k(u + 1) - 1, and shows r discriminates the first p^l + 1 terms.
/// Requires p prime >= 3, p^k >= 5, gcd(p, b) == 1, b and c nonzero.
QpCounterexample counterexample_qp(std::int64_t p, int k, std::int64_t b, std::int64_t c,
                                   Scaling scaling = Scaling::integer,
                                   int max_digits = kDefaultMaxDigits);

/// Pair budget below which counterexample_qp checks every pair.
inline constexpr std::int64_t kExhaustivePairBudget = 1'000'000;

} // namespace disclab::primes

#pragma once

#include "disclab/witness/types.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace disclab::witness {

/// Necessary conditions for alpha n^2 + beta n + gamma to have discriminator
/// 3^ceil(log_3 n): alpha = 3c, beta = bc, 3 does not divide bc, and b even
/// implies c even. Reports (b, c) when they exist.
Classification necessary_p3(std::int64_t alpha, std::int64_t beta);

/// The five sufficient conditions for 3c n^2 + bc n:
///   1. b >= -2
///   2. 3 does not divide bc
///   3. b even implies c even
///   4. b odd and some 2^x with 2*3^k < 2^x < 3^(k+1), 2^x <= |b|,
///      (b mod 2^x) == 0 (mod 3) for a k >= 1, implies c even
///   5. every prime p with 2*3^k < p < 3^(k+1), p <= |b|,
///      (b mod p) == 0 (mod 3) for a k >= 1 divides c
/// Conditions 4 and 5 record the triggering moduli. b, c nonzero.
Classification sufficient_p3(std::int64_t b, std::int64_t c);

/// (0, l) if l <= 3^k, else (l - 3^k, 3^k). Throws ErrorCode::out_of_range
/// unless 0 < l < 2 * 3^k.
std::pair<std::int64_t, std::int64_t> eyejayell(std::int64_t ell, int k);

/// u + v - 1 <= 3^k for u >= 3, odd v >= 5, k >= 2, 3^k <= uv < 3^(k+1).
/// Throws ErrorCode::precondition when the hypotheses fail.
bool youvee_check(std::int64_t u, std::int64_t v, int k);

struct CaseWitness {
    PairWitness witness;
    std::string label;  // "1", "2a", ..., "5"
};

/// For 3c n^2 + bc n satisfying sufficient_p3 and 1 <= m < 3^(k+1): a pair
/// 0 <= i < j <= 3^k with m | q(j) - q(i), built by the case analysis on
/// m = 2^x 3^y r. Powers of two, primes >= 5 and their doubles, and
/// {2,3}-smooth moduli use their dedicated constructions at every level;
/// the remaining composites use (0, m) when m <= 3^k and the u*v split
/// otherwise.
CaseWitness qt_lower_witness_traced(std::int64_t b, std::int64_t c, int k, std::int64_t m);

PairWitness qt_lower_witness(std::int64_t b, std::int64_t c, int k, std::int64_t m);

/// The u * v split for composite m: v is the largest divisor of m with
/// gcd(v, 6) == 1, v >= 5 and m / v >= 3.
std::pair<std::int64_t, std::int64_t> uv_split(std::int64_t m);

} // namespace disclab::witness

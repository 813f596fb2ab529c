#pragma once

#include "disclab/witness/types.hpp"

#include <cstdint>

namespace disclab::witness {

/// Integer alpha n^2 + beta n + gamma: characterized iff
///   1. alpha = 2^t r with t >= 1 and r odd,
///   2. beta is odd,
///   3. r divides beta.
/// Always reports the (t, r) split of alpha.
Classification classify_p2_integer(std::int64_t alpha, std::int64_t beta);

/// (a/2) n^2 + (b/2) n + gamma with a, b odd: characterized iff a == b.
/// a == -b is flagged degenerate (q(0) == q(1)).
Classification classify_p2_half(std::int64_t a_odd, std::int64_t b_odd);

/// For odd a != +-b: the collision modulo 2^k at n = 2^k, where k is the
/// least exponent with 2^k > |a| and 2^k > |b|. Throws
/// ErrorCode::not_applicable for a == b or the degenerate a == -b.
Counterexample p2_half_counterexample(std::int64_t a_odd, std::int64_t b_odd);

/// For 2^t n^2 + b n (t >= 1, b odd) and 1 <= m < 2^(k+1): a pair
/// 0 <= i < j <= 2^k with m | q(j) - q(i).
PairWitness p2_lower_witness(int t, std::int64_t b, int k, std::int64_t m);

/// Same for the triangular numbers; every non-trivial pair has difference
/// exactly m.
PairWitness tr_lower_witness(int k, std::int64_t m);

/// upper_bound_check with p = 2.
bool upper_bound_check_p2(const QuadSeq& q, int k);

} // namespace disclab::witness

#pragma once

// Constructions that apply for any prime p: the sufficient conditions for
// D(n) = p^ceil(log_p n), the collision constructions showing a quadratic
// misses that form, and shifting.

#include "disclab/witness/types.hpp"

#include <cstdint>
#include <optional>

namespace disclab::witness {

/// n -> q(n + c), i.e. (a2, b2 + 2 a2 c, q(c)) in doubled form.
QuadSeq shift(const QuadSeq& q, std::int64_t c);

/// True when p^(k+1) divides no difference q(j) - q(i), 0 <= i < j < p^(k+1).
/// Equivalent to p^(k+1) discriminating the first p^(k+1) terms, which is how
/// it is checked; a repeated term counts as a collision.
bool upper_bound_check(const QuadSeq& q, std::int64_t p, int k);

/// Brute-force check of the two level-wise conditions that together force
/// D(n) = p^ceil(log_p n):
///   lower: every 1 <= m < p^(k+1) divides some q(j) - q(i), 0 <= i < j <= p^k;
///   upper: upper_bound_check(q, p, k).
/// Levels 0..max_level are checked; the first failure is reported.
struct PrimePowerConditions {
    bool lower_holds = true;
    bool upper_holds = true;
    std::optional<int> failing_level;
    std::optional<std::int64_t> failing_modulus;  // lower-condition failure
};
PrimePowerConditions check_prime_power_conditions(const QuadSeq& q, std::int64_t p, int max_level);

/// For an integer-coefficient q and prime p with any of
///   1. p does not divide alpha,
///   2. p divides beta,
///   3. alpha = p^k c (p not dividing c) with c not dividing beta,
/// builds the explicit n with D(n) != p^ceil(log_p n):
///   case 1: i = 0, j = -beta alpha^-1 mod p^l, collision modulo p^l;
///   case 2: i = 0, j = p^(l-1), collision modulo p^l;
///   case 3: a prime r | c with r not dividing beta discriminates r terms.
/// When case 1 yields j = 0 then p^l | beta and case 2 is used instead.
/// Requires l >= 2. Throws ErrorCode::not_applicable if none of the
/// conditions holds, or in case 3 when every prime factor of c divides beta.
Counterexample lemma2_witness(std::int64_t p, const QuadSeq& q, int ell);

/// Which arguments rule out D(n) = p^ceil(log_p n) for q and an odd prime p.
///
/// Unlike the p = 2 and p = 3 classifiers, each condition here is a trigger:
/// holds == true means that argument applies. The verdict is violates (with
/// the first applying id) or undecided when nothing applies.
///
/// Half-integer q (a2, b2 odd), ids as follows:
///   1. a2 == b2            2. p does not divide a2     3. p divides b2
///   4. a2 = p^k c, c does not divide b2                5. c divides b2, p^k >= 5
/// Integer q (alpha, beta):
///   1. p does not divide alpha   2. p divides beta
///   3. alpha = p^k c, c does not divide beta           4. c divides beta, p^k >= 5
/// Undecided is only reachable for p = 3 with k = 1.
Classification nonexistence_check(std::int64_t p, const QuadSeq& q);

/// Materializes the first applying trigger of nonexistence_check as a
/// Counterexample (collision constructions use level l).
Counterexample nonexistence_counterexample(std::int64_t p, const QuadSeq& q, int ell = 2);

/// Half-integer form of nonexistence_check; both numerators must be odd.
Classification qr_not_disc_check(std::int64_t p, std::int64_t a_odd, std::int64_t b_odd);

} // namespace disclab::witness

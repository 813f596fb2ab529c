#include "disclab/primes.hpp"

#include "disclab/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace disclab::primes {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::vector<u64> simple_sieve(u64 limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

u64 isqrt(u64 n) {
    auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : kBases) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : kBases) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_in_window(std::uint64_t lo, std::uint64_t hi) {
    require(lo < hi, "window needs lo < hi");
    std::vector<u64> out;
    if (hi - lo < 2) return out;
    const u64 first = std::max<u64>(lo + 1, 2);
    const u64 last = hi - 1;
    if (first > last) return out;

    const std::vector<u64> base = simple_sieve(isqrt(last));
    constexpr u64 kSegment = u64{1} << 18;
    std::vector<bool> composite;
    for (u64 seg_lo = first; seg_lo <= last;) {
        const u64 seg_hi = std::min(last, seg_lo + kSegment - 1);
        composite.assign(seg_hi - seg_lo + 1, false);
        for (u64 p : base) {
            if (p * p > seg_hi) break;
            u64 start = std::max(p * p, (seg_lo + p - 1) / p * p);
            for (u64 x = start; x <= seg_hi; x += p) composite[x - seg_lo] = true;
        }
        for (u64 x = seg_lo; x <= seg_hi; ++x)
            if (!composite[x - seg_lo]) out.push_back(x);
        if (seg_hi == last) break;
        seg_lo = seg_hi + 1;
    }
    return out;
}

ZCounterInput::ZCounterInput(std::int64_t p, int k, std::int64_t b, std::int64_t r)
    : p_(p), k_(k), b_(b), r_(r), base_(0) {
    require(p >= 3 && is_prime(static_cast<u64>(p)), "p must be a prime >= 3");
    require(k >= 1, "k must be >= 1");
    base_ = ipow(p, k);
    require(base_ >= 5, "p^k must be >= 5");
    require(gcd(p, b) == 1, "gcd(p, b) must be 1");
    require(r >= 2 && is_prime(static_cast<u64>(r)), "r must be prime");
    require(r > (b < 0 ? -b : b), "r must exceed |b|");
    require(mod(r, base_) == mod(-b, base_), "r must be congruent to -b modulo p^k");
}

std::int64_t zcounter(const ZCounterInput& in) {
    const wide_int numerator =
        checked_sub(checked_mul(static_cast<wide_int>(in.base() - 1), in.r()), in.b());
    if (numerator % in.base() != 0)
        fail(ErrorCode::precondition, "(p^k - 1) r - b is not divisible by p^k");
    return narrow(numerator / in.base());
}

PrimeSearchSpec PrimeSearchSpec::for_leading_max(std::int64_t base, std::int64_t residue,
                                                 std::int64_t min_value, int max_digits) {
    return {base, base - 1, residue, min_value, max_digits};
}

void PrimeSearchSpec::validate() const {
    require(base >= 5, "search base must be >= 5");
    require(leading_digit >= 1 && leading_digit < base, "leading digit out of range");
    require(residue >= 0 && residue < base, "residue must lie in [0, base)");
    require(gcd(residue, base) == 1, "residue must be coprime to the base");
    require(max_digits >= 0, "max_digits must be nonnegative");
}

DigitPrime find_digit_prime(const PrimeSearchSpec& spec) {
    spec.validate();
    std::int64_t power = 1;  // base^u
    for (int u = 0; u <= spec.max_digits; ++u) {
        if (u > 0) power = checked_mul(power, spec.base);
        const std::int64_t lo = checked_mul(spec.leading_digit, power);
        const std::int64_t hi = checked_mul(spec.leading_digit + 1, power);
        std::int64_t x = std::max(lo, checked_add(spec.min_value, std::int64_t{1}));
        x = checked_add(x, mod(spec.residue - x, spec.base));
        for (; x < hi; x += spec.base) {
            if (is_prime(static_cast<u64>(x))) return {x, u};
        }
    }
    throw SearchExhausted(spec.max_digits);
}

QpCounterexample counterexample_qp(std::int64_t p, int k, std::int64_t b, std::int64_t c,
                                   Scaling scaling, int max_digits) {
    require(p >= 3 && is_prime(static_cast<u64>(p)), "p must be a prime >= 3");
    require(k >= 1, "k must be >= 1");
    require(b != 0 && c != 0, "b and c must be nonzero");
    const std::int64_t base = ipow(p, k);
    require(base >= 5, "p^k must be >= 5");
    require(gcd(p, b) == 1, "gcd(p, b) must be 1");

    const std::int64_t a_coeff = checked_mul(base, c);
    const std::int64_t b_coeff = checked_mul(b, c);
    const QuadSeq seq = scaling == Scaling::integer
                            ? QuadSeq::integer(a_coeff, b_coeff)
                            : QuadSeq::half(a_coeff, b_coeff);

    const std::int64_t abs_b = b < 0 ? -b : b;
    const std::int64_t abs_c = c < 0 ? -c : c;
    const DigitPrime prime = find_digit_prime(
        PrimeSearchSpec::for_leading_max(base, mod(-b, base), std::max(abs_b, abs_c), max_digits));
    const std::int64_t r = prime.r;
    const int ell = k * (prime.u + 1) - 1;
    const std::int64_t p_ell = ipow(p, ell);
    const std::int64_t n = checked_add(p_ell, std::int64_t{1});
    const std::int64_t z = zcounter(ZCounterInput(p, k, b, r));

    witness::Counterexample cx = witness::make_smaller(
        seq, p, n, r,
        "prime r = " + std::to_string(r) + " with leading base-" + std::to_string(base) +
            " digit " + std::to_string(base - 1) + " discriminates the first p^" +
            std::to_string(ell) + " + 1 terms");

    const std::int64_t target = ipow(p, ell + 1);
    if (r >= target)
        fail(ErrorCode::internal_contradiction, "digit prime is not below p^(l+1)");

    const wide_int pairs = static_cast<wide_int>(n) * (n - 1) / 2;
    if (pairs <= kExhaustivePairBudget) {
        if (!discriminates(Terms::prefix(seq, n), r))
            fail(ErrorCode::internal_contradiction,
                 "r = " + std::to_string(r) + " fails to discriminate the first " +
                     std::to_string(n) + " terms");
        cx.smaller->mode = witness::CheckMode::exhaustive;
    } else {
        // (p^k - 1) p^(l-k+1) <= r < p^(l+1), r > max(|b|, |c|), and the least
        // i + j with r | p^k (i + j) + b is z, which exceeds 2 p^l - 1.
        const std::int64_t lower = checked_mul(base - 1, ipow(p, ell - k + 1));
        const bool chain = lower <= r && r > std::max(abs_b, abs_c) && r > p_ell &&
                           z > 2 * p_ell - 1;
        if (!chain)
            fail(ErrorCode::internal_contradiction, "inequality chain fails for r = " +
                                                        std::to_string(r));
        std::mt19937_64 rng(static_cast<u64>(p * 1000003 + k * 10007 + b * 101 + c));
        std::uniform_int_distribution<std::int64_t> pick(0, p_ell);
        for (int s = 0; s < 4096; ++s) {
            std::int64_t i = pick(rng), j = pick(rng);
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            if (pair_difference(seq, i, j) % r == 0)
                fail(ErrorCode::internal_contradiction,
                     "sampled pair (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") collides modulo r = " + std::to_string(r));
        }
        cx.smaller->mode = witness::CheckMode::inequality_chain_sampled;
    }
    cx.smaller->verified = true;
    return {std::move(cx), prime, ell, z};
}

} // namespace disclab::primes

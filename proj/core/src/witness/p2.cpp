#include "disclab/witness/p2.hpp"

#include "disclab/error.hpp"
#include "disclab/witness/general.hpp"

#include <string>

namespace disclab::witness {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// Exponent e with 2^e == m, or -1.
int exact_log2(std::int64_t m) {
    if (m < 1 || (m & (m - 1)) != 0) return -1;
    return valuation(m, 2);
}

IndexBound level_bound(int k) { return {ipow(2, k), true}; }

void require_level(int k, std::int64_t m) {
    require(k >= 0 && k <= 30, "level must lie in [0, 30]");
    require(m >= 1 && m < ipow(2, k + 1), "modulus must lie in [1, 2^(k+1))");
}

} // namespace

Classification classify_p2_integer(std::int64_t alpha, std::int64_t beta) {
    require(alpha != 0, "alpha must be nonzero");
    const int t = valuation(alpha, 2);
    const std::int64_t r = alpha / ipow(2, t);

    Classification out;
    out.p = 2;
    out.two_adic = TwoAdicSplit{t, r};
    const std::string split = "alpha = 2^" + str(t) + " * " + str(r);
    out.conditions.push_back({1, t >= 1, "alpha = 2^t r with t >= 1 and r odd", split, {}});
    out.conditions.push_back({2, beta % 2 != 0, "beta is odd", "beta = " + str(beta), {}});
    out.conditions.push_back({3, beta % r == 0, "r divides beta", "r = " + str(r), {}});
    settle(out);
    return out;
}

Classification classify_p2_half(std::int64_t a_odd, std::int64_t b_odd) {
    require(a_odd % 2 != 0 && b_odd % 2 != 0, "half-integer numerators must be odd");
    Classification out;
    out.p = 2;
    out.conditions.push_back({1, a_odd == b_odd, "a == b", "a = " + str(a_odd) + ", b = " + str(b_odd), {}});
    out.degenerate = a_odd == -b_odd;
    if (out.degenerate) out.note = "q(0) == q(1): no modulus discriminates two terms";
    settle(out);
    return out;
}

Counterexample p2_half_counterexample(std::int64_t a_odd, std::int64_t b_odd) {
    const Classification cls = classify_p2_half(a_odd, b_odd);
    if (cls.verdict == Verdict::characterized)
        fail(ErrorCode::not_applicable, "a == b: the discriminator is a power of 2");
    if (cls.degenerate) fail(ErrorCode::not_applicable, cls.note);

    int k = 1;
    while (ipow(2, k) <= abs64(a_odd) || ipow(2, k) <= abs64(b_odd)) ++k;
    const std::int64_t pk = ipow(2, k);
    const std::int64_t modulus = 2 * pk;
    // i + j == x (mod 2^(k+1)) makes a (i + j) + b vanish modulo 2^(k+1).
    const std::int64_t x =
        mod(checked_mul(-b_odd, mod_inverse(mod(a_odd, modulus), modulus)), modulus);
    const std::int64_t i = x < pk ? 0 : x - (pk - 1);
    const std::int64_t j = x < pk ? x : pk - 1;
    Counterexample cx = make_collision(QuadSeq::half(a_odd, b_odd), 2, pk, i, j,
                                       "i + j = -b/a mod 2^" + str(k + 1) + " with 2^" +
                                           str(k) + " > |a|, |b|");
    ensure_verified(cx, "half-integer collision");
    return cx;
}

PairWitness p2_lower_witness(int t, std::int64_t b, int k, std::int64_t m) {
    require(t >= 1 && t <= 29, "t must lie in [1, 29]");
    require(b % 2 != 0, "b must be odd");
    require_level(k, m);
    const QuadSeq q = QuadSeq::integer(ipow(2, t), b);
    const std::int64_t pk = ipow(2, k);

    PairWitness w{m, 0, 0, level_bound(k)};
    if (exact_log2(m) >= 0) {
        w.j = m;
    } else if (m % 2 != 0) {
        std::int64_t x = mod(checked_mul(-b, mod_inverse(mod(ipow(2, t), m), m)), m);
        if (x == 0) x = m;
        if (x <= pk) {
            w.j = x;
        } else {
            w.i = x - pk;
            w.j = pk;
        }
    } else {
        const int ell = valuation(m, 2);
        const std::int64_t r = m >> ell;
        const std::int64_t x =
            mod(checked_mul(-b, mod_inverse(mod(ipow(2, t + 1), r), r)), r);
        w.i = mod(x - ipow(2, ell - 1), r);
        w.j = w.i + ipow(2, ell);
    }
    ensure_verified(q, w, "2^t n^2 + b n lower bound");
    return w;
}

PairWitness tr_lower_witness(int k, std::int64_t m) {
    require_level(k, m);
    PairWitness w{m, 0, 0, level_bound(k)};
    if (exact_log2(m) >= 0) {
        w.i = m - 1;
        w.j = m;
    } else if (m % 2 != 0) {
        w.i = m / 2 - 1;
        w.j = m / 2 + 1;
    } else {
        const int ell = valuation(m, 2);
        const std::int64_t pl = ipow(2, ell);
        const std::int64_t r = (m / pl - 1) / 2;
        w.i = r >= pl ? r - pl : pl - r - 1;
        w.j = r + pl;
    }
    ensure_verified(QuadSeq::triangular(), w, "triangular lower bound");
    return w;
}

bool upper_bound_check_p2(const QuadSeq& q, int k) { return upper_bound_check(q, 2, k); }

} // namespace disclab::witness

#include "disclab/witness/p3.hpp"

#include "disclab/error.hpp"
#include "disclab/primes.hpp"

#include <algorithm>

namespace disclab::witness {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

bool is_prime64(std::int64_t n) { return n >= 2 && primes::is_prime(static_cast<std::uint64_t>(n)); }

std::string join(const std::vector<std::int64_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + str(xs[i]);
    return out;
}

// Least l with 3l + b == 0 (mod m), replaced by m when it is 0.
std::int64_t third_root(std::int64_t b, std::int64_t m) {
    if (m == 1) return 1;
    const std::int64_t l = mod(checked_mul(-b, mod_inverse(3, m)), m);
    return l == 0 ? m : l;
}

// l > 0 with 3l + z == 0 (mod m), for m and z not divisible by 3.
std::int64_t lift_z(std::int64_t m, std::int64_t z) {
    if (mod(z, 3) == 0) fail(ErrorCode::internal_contradiction, "z = " + str(z) + " is divisible by 3");
    const std::int64_t target = mod(m, 3) == mod(z, 3) ? m : 2 * m;
    return (target - z) / 3;
}

PairWitness from_sum(std::int64_t ell, int k, std::int64_t m) {
    const auto [i, j] = eyejayell(ell, k);
    return {m, i, j, {ipow(3, k), true}};
}

} // namespace

Classification necessary_p3(std::int64_t alpha, std::int64_t beta) {
    require(alpha != 0, "alpha must be nonzero");
    Classification out;
    out.p = 3;
    const bool three = alpha % 3 == 0;
    const std::int64_t c = alpha / 3;
    const bool split = three && beta % c == 0;
    out.conditions.push_back({1, three, "alpha = 3c", "alpha = " + str(alpha), {}});
    if (!split) {
        out.conditions.push_back({2, false, "beta = bc",
                                  three ? "c = " + str(c) + " does not divide beta"
                                        : "requires alpha = 3c",
                                  {}});
        out.conditions.push_back({3, false, "3 does not divide bc", "requires beta = bc", {}});
        out.conditions.push_back({4, false, "b even implies c even", "requires beta = bc", {}});
        settle(out);
        return out;
    }
    const std::int64_t b = beta / c;
    out.three_split = ThreeSplit{b, c};
    const std::string bc = "b = " + str(b) + ", c = " + str(c);
    out.conditions.push_back({2, true, "beta = bc", bc, {}});
    out.conditions.push_back({3, b % 3 != 0 && c % 3 != 0, "3 does not divide bc", bc, {}});
    out.conditions.push_back({4, b % 2 != 0 || c % 2 == 0, "b even implies c even", bc, {}});
    settle(out);
    return out;
}

Classification sufficient_p3(std::int64_t b, std::int64_t c) {
    require(b != 0 && c != 0, "b and c must be nonzero");
    const std::int64_t abs_b = abs64(b);
    const bool b_even = b % 2 == 0;
    const bool c_even = c % 2 == 0;

    std::vector<std::int64_t> powers;    // triggering 2^x
    std::vector<std::int64_t> offenders; // triggering primes not dividing c
    std::vector<std::int64_t> triggers;  // every triggering prime
    for (int k = 1;; ++k) {
        const std::int64_t lo = 2 * ipow(3, k);
        if (lo >= abs_b) break;
        const std::int64_t hi = std::min(3 * ipow(3, k), abs_b + 1);
        if (!b_even) {
            for (std::int64_t x = 1; x < hi; x *= 2)
                if (x > lo && mod(mod(b, x), 3) == 0) powers.push_back(x);
        }
        for (std::uint64_t p : primes::primes_in_window(static_cast<std::uint64_t>(lo),
                                                        static_cast<std::uint64_t>(hi))) {
            const auto pp = static_cast<std::int64_t>(p);
            if (mod(mod(b, pp), 3) != 0) continue;
            triggers.push_back(pp);
            if (c % pp != 0) offenders.push_back(pp);
        }
    }

    Classification out;
    out.p = 3;
    out.three_split = ThreeSplit{b, c};
    out.conditions.push_back({1, b >= -2, "b >= -2", "b = " + str(b), {}});
    out.conditions.push_back({2, b % 3 != 0 && c % 3 != 0, "3 does not divide bc", "", {}});
    out.conditions.push_back({3, !b_even || c_even, "b even implies c even", "", {}});
    out.conditions.push_back({4, powers.empty() || c_even,
                              "odd b with a 2^x in (2*3^k, 3^(k+1)), 2^x <= |b|, "
                              "(b mod 2^x) divisible by 3 implies c even",
                              powers.empty() ? "no such 2^x" : "triggered by 2^x = " + join(powers),
                              powers});
    out.conditions.push_back({5, offenders.empty(),
                              "every prime p in (2*3^k, 3^(k+1)), p <= |b|, with (b mod p) "
                              "divisible by 3 divides c",
                              triggers.empty()    ? "no such prime"
                              : offenders.empty() ? "triggered by p = " + join(triggers) + ", all divide c"
                                                  : "p = " + join(offenders) + " does not divide c",
                              offenders.empty() ? triggers : offenders});
    settle(out);
    return out;
}

std::pair<std::int64_t, std::int64_t> eyejayell(std::int64_t ell, int k) {
    require(k >= 0, "k must be nonnegative");
    const std::int64_t pk = ipow(3, k);
    if (ell <= 0 || ell >= 2 * pk)
        fail(ErrorCode::out_of_range, "l = " + str(ell) + " must lie in (0, 2*3^" + str(k) + ")");
    if (ell <= pk) return {0, ell};
    return {ell - pk, pk};
}

bool youvee_check(std::int64_t u, std::int64_t v, int k) {
    require(u >= 3, "u must be >= 3");
    require(v >= 5 && v % 2 != 0, "v must be odd and >= 5");
    require(k >= 2, "k must be >= 2");
    const std::int64_t uv = checked_mul(u, v);
    require(uv >= ipow(3, k) && uv < ipow(3, k + 1), "uv must lie in [3^k, 3^(k+1))");
    return u + v - 1 <= ipow(3, k);
}

std::pair<std::int64_t, std::int64_t> uv_split(std::int64_t m) {
    std::int64_t best = 0;
    auto consider = [&](std::int64_t v) {
        if (v >= 5 && gcd(v, 6) == 1 && m / v >= 3) best = std::max(best, v);
    };
    for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        consider(d);
        consider(m / d);
    }
    if (best == 0) fail(ErrorCode::precondition, str(m) + " has no u * v split");
    return {m / best, best};
}

CaseWitness qt_lower_witness_traced(std::int64_t b, std::int64_t c, int k, std::int64_t m) {
    require(k >= 0 && k <= 18, "k must lie in [0, 18]");
    const std::int64_t pk = ipow(3, k);
    require(m >= 1 && m < 3 * pk, "m must lie in [1, 3^(k+1))");
    if (sufficient_p3(b, c).verdict != Verdict::characterized)
        fail(ErrorCode::precondition,
             "(b, c) = (" + str(b) + ", " + str(c) + ") fails the sufficient conditions");
    const QuadSeq q = QuadSeq::integer(checked_mul(std::int64_t{3}, c), checked_mul(b, c));
    const IndexBound bound{pk, true};
    const bool b_even = b % 2 == 0;
    const FactoredModulus f = factor_2_3(m);

    CaseWitness out{{m, 0, 0, bound}, ""};
    PairWitness& w = out.witness;
    if (f.r == 1 && f.y == 0 && f.x >= 1) {
        if (m < 2 * pk) {
            out.label = "2a";
            w = from_sum(third_root(b, m), k, m);
        } else if (c % 2 == 0) {
            out.label = "2b";
            if (m == 2) {
                w.j = 1;
            } else {
                w = from_sum(third_root(b, m / 2), k, m);
            }
        } else {
            out.label = "2c";
            if (m == 2) {
                w.j = 1;
            } else {
                w = from_sum(lift_z(m, b < 0 ? b : mod(b, m)), k, m);
            }
        }
    } else if (is_prime64(m) && m >= 5) {
        if (m < 2 * pk) {
            out.label = "3a";
            w = from_sum(third_root(b, m), k, m);
        } else {
            out.label = "3b";
            if (mod(mod(b, m), 3) == 0 && c % m == 0) {
                w.j = 1;
            } else {
                w = from_sum(lift_z(m, b < 0 ? b : mod(b, m)), k, m);
            }
        }
    } else if (m % 2 == 0 && m / 2 >= 5 && is_prime64(m / 2)) {
        out.label = "3c";
        w = from_sum(third_root(b, m / 2), k, m);
    } else if (f.r == 1) {
        const std::int64_t three_y = ipow(3, f.y);
        if (f.x <= 1) {
            out.label = "4a";
            w.j = three_y;
        } else if (f.x == 2 && b_even) {
            out.label = "4b";
            w.j = 2 * three_y;
        } else if (b_even) {
            out.label = "4c";
            w.j = m / 4;
        } else {
            out.label = "4d";
            const std::int64_t px = ipow(2, f.x);
            const std::int64_t ell = mod(mod(checked_mul(-b, mod_inverse(3, px)), px) - three_y, px);
            w.i = ell == 0 ? px / 2 : ell / 2;
            w.j = w.i + three_y;
        }
    } else if (m <= pk) {
        // The u * v bound needs uv >= 3^k.
        out.label = "1";
        w.j = m;
    } else {
        out.label = "5";
        const auto [u, v] = uv_split(m);
        if (!youvee_check(u, v, k))
            fail(ErrorCode::internal_contradiction, "u + v - 1 exceeds 3^k for m = " + str(m));
        const std::int64_t ell = mod(mod(checked_mul(-b, mod_inverse(3, v)), v) - u, v);
        w.i = ell % 2 == 0 ? ell / 2 : (ell + v) / 2;
        w.j = w.i + u;
    }
    w.m = m;
    w.bound = bound;
    ensure_verified(q, w, ("3c n^2 + bc n lower bound, case " + out.label).c_str());
    return out;
}

PairWitness qt_lower_witness(std::int64_t b, std::int64_t c, int k, std::int64_t m) {
    return qt_lower_witness_traced(b, c, k, m).witness;
}

} // namespace disclab::witness

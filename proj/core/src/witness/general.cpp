#include "disclab/witness/general.hpp"

#include "disclab/error.hpp"
#include "disclab/primes.hpp"

#include <string>

namespace disclab::witness {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

bool divides(std::int64_t d, std::int64_t n) { return n % d == 0; }

void require_prime(std::int64_t p) {
    require(p >= 2 && primes::is_prime(static_cast<std::uint64_t>(p)),
            str(p) + " is not prime");
}

// (A, B) with q(j) - q(i) = (j - i)(A (i + j) + B), up to a factor 1/2 for
// half-integer q. A factor of 2 never matters for odd p, and for p = 2 only
// integer q reach the collision cases.
struct Coefficients {
    std::int64_t a;
    std::int64_t b;
};

Coefficients coefficients(const QuadSeq& q) {
    if (q.has_integer_coefficients()) return {q.alpha(), q.beta()};
    return {q.a2(), q.b2()};
}

// p^k c with p not dividing c; k == 0 when p does not divide a.
struct PrimeSplit {
    int k;
    std::int64_t c;
};

PrimeSplit split(std::int64_t a, std::int64_t p) {
    const int k = valuation(a, p);
    return {k, a / ipow(p, k)};
}

Counterexample collision_case1(std::int64_t p, const QuadSeq& q, Coefficients co, int ell) {
    const std::int64_t pl = ipow(p, ell);
    const std::int64_t j = mod(checked_mul(-co.b, mod_inverse(mod(co.a, pl), pl)), pl);
    return make_collision(q, p, pl, 0, j,
                          "case 1: p does not divide the leading coefficient; j = -beta/alpha mod p^" +
                              str(ell));
}

Counterexample collision_case2(std::int64_t p, const QuadSeq& q, int ell) {
    const std::int64_t pl = ipow(p, ell);
    return make_collision(q, p, pl, 0, pl / p,
                          "case 2: p divides both coefficients; j = p^" + str(ell - 1));
}

Counterexample smaller_case3(std::int64_t p, const QuadSeq& q, Coefficients co) {
    const PrimeSplit s = split(co.a, p);
    for (std::int64_t r : prime_divisors(s.c)) {
        if (divides(r, co.b)) continue;
        return make_smaller(q, p, r, r,
                            "case 3: prime " + str(r) + " divides c = " + str(s.c) +
                                " but not beta, so it discriminates the first " + str(r) +
                                " terms");
    }
    fail(ErrorCode::not_applicable,
         "every prime factor of c = " + str(s.c) + " divides beta = " + str(co.b));
}

Counterexample finish(Counterexample cx) {
    ensure_verified(cx, "collision construction");
    if (cx.smaller) cx.smaller->verified = true;
    return cx;
}

} // namespace

QuadSeq shift(const QuadSeq& q, std::int64_t c) {
    const std::int64_t b2 = checked_add(q.b2(), checked_mul(checked_mul(std::int64_t{2}, q.a2()), c));
    return QuadSeq(q.a2(), b2, narrow(eval(q, c)), q.label());
}

bool upper_bound_check(const QuadSeq& q, std::int64_t p, int k) {
    require_prime(p);
    require(k >= 0, "level must be nonnegative");
    const std::int64_t modulus = ipow(p, k + 1);
    try {
        return discriminates(Terms::prefix(q, modulus), modulus);
    } catch (const DuplicateTerm&) {
        return false;
    }
}

PrimePowerConditions check_prime_power_conditions(const QuadSeq& q, std::int64_t p,
                                                  int max_level) {
    require_prime(p);
    require(max_level >= 0, "max_level must be nonnegative");
    PrimePowerConditions out;
    for (int k = 0; k <= max_level; ++k) {
        const std::int64_t pk = ipow(p, k);
        const std::int64_t next = checked_mul(pk, p);
        for (std::int64_t m = 1; m < next; ++m) {
            if (!failure_witness(q, pk + 1, m)) {
                out.lower_holds = false;
                out.failing_level = k;
                out.failing_modulus = m;
                return out;
            }
        }
        if (!upper_bound_check(q, p, k)) {
            out.upper_holds = false;
            out.failing_level = k;
            return out;
        }
    }
    return out;
}

Counterexample lemma2_witness(std::int64_t p, const QuadSeq& q, int ell) {
    require_prime(p);
    require(ell >= 2, "level must be >= 2");
    require(q.has_integer_coefficients(), "integer coefficients required");
    const Coefficients co = coefficients(q);
    if (!divides(p, co.a)) {
        Counterexample cx = collision_case1(p, q, co, ell);
        if (cx.collision->j != 0) return finish(std::move(cx));
        // p^l | beta; case 2 applies as well.
    }
    if (divides(p, co.b)) return finish(collision_case2(p, q, ell));
    const PrimeSplit s = split(co.a, p);
    if (divides(s.c, co.b))
        fail(ErrorCode::not_applicable, "p divides alpha, p does not divide beta, and c = " +
                                            str(s.c) + " divides beta");
    return finish(smaller_case3(p, q, co));
}

Classification nonexistence_check(std::int64_t p, const QuadSeq& q) {
    require_prime(p);
    require(p >= 3, "p must be odd");
    const bool half = !q.has_integer_coefficients();
    const Coefficients co = coefficients(q);
    const std::string A = half ? "a" : "alpha";
    const std::string B = half ? "b" : "beta";
    const bool p_divides_a = divides(p, co.a);
    const PrimeSplit s = split(co.a, p);

    Classification out;
    out.p = p;
    int id = 1;
    if (half) {
        out.conditions.push_back({id++, co.a == co.b, A + " == " + B, "", {}});
        out.degenerate = co.a == -co.b;
    }
    out.conditions.push_back({id++, !p_divides_a, "p does not divide " + A, "", {}});
    out.conditions.push_back({id++, divides(p, co.b), "p divides " + B, "", {}});
    const std::string detail =
        p_divides_a ? A + " = " + str(p) + "^" + str(s.k) + " * " + str(s.c) : "p does not divide " + A;
    out.conditions.push_back({id++, p_divides_a && !divides(s.c, co.b),
                              A + " = p^k c with c not dividing " + B, detail, {}});
    const bool big_power = p_divides_a && ipow(p, s.k) >= 5;
    out.conditions.push_back({id++, p_divides_a && divides(s.c, co.b) && big_power,
                              "c divides " + B + " and p^k >= 5", detail, {}});

    for (const auto& c : out.conditions) {
        if (c.holds) {
            out.verdict = Verdict::violates;
            out.violated = c.id;
            return out;
        }
    }
    out.verdict = Verdict::undecided;
    out.note = "no non-existence argument applies";
    return out;
}

Counterexample nonexistence_counterexample(std::int64_t p, const QuadSeq& q, int ell) {
    const Classification cls = nonexistence_check(p, q);
    if (cls.verdict != Verdict::violates)
        fail(ErrorCode::not_applicable, "no non-existence argument applies");
    require(ell >= 2, "level must be >= 2");
    const bool half = !q.has_integer_coefficients();
    const Coefficients co = coefficients(q);
    // Align the half-integer ids with the integer ones.
    const int trigger = half ? cls.violated - 1 : cls.violated;
    switch (trigger) {
    case 0:
        return finish(make_smaller(q, p, 2, 2, "a == b: q(1) - q(0) = a is odd, so 2 discriminates"));
    case 1: {
        Counterexample cx = collision_case1(p, q, co, ell);
        if (cx.collision->j != 0) return finish(std::move(cx));
        return finish(collision_case2(p, q, ell));
    }
    case 2: return finish(collision_case2(p, q, ell));
    case 3: return finish(smaller_case3(p, q, co));
    case 4: {
        const PrimeSplit s = split(co.a, p);
        auto qp = primes::counterexample_qp(p, s.k, co.b / s.c, s.c,
                                            half ? primes::Scaling::half : primes::Scaling::integer);
        Counterexample cx = std::move(qp.counterexample);
        cx.seq = q;  // keeps the caller's constant term and label
        return cx;
    }
    }
    fail(ErrorCode::internal_contradiction, "unknown trigger " + str(cls.violated));
}

Classification qr_not_disc_check(std::int64_t p, std::int64_t a_odd, std::int64_t b_odd) {
    return nonexistence_check(p, QuadSeq::half(a_odd, b_odd));
}

} // namespace disclab::witness

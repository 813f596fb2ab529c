#include "disclab/witness/types.hpp"

#include "disclab/error.hpp"
#include "disclab/primes.hpp"

namespace disclab::witness {

PrimePowerTarget::PrimePowerTarget(std::int64_t p, int k) : p_(p), k_(k) {
    require(p >= 2 && primes::is_prime(static_cast<std::uint64_t>(p)),
            std::to_string(p) + " is not prime");
    require(k >= 1, "prime power exponent must be >= 1");
    value_ = ipow(p, k);
}

const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::characterized: return "characterized";
    case Verdict::violates: return "violates";
    case Verdict::undecided: return "undecided";
    }
    return "?";
}

const char* to_string(CounterexampleKind k) noexcept {
    switch (k) {
    case CounterexampleKind::collision_at_prime_power: return "collision";
    case CounterexampleKind::smaller_discriminator_exists: return "smaller";
    }
    return "?";
}

const Condition& Classification::condition(int id) const {
    for (const auto& c : conditions)
        if (c.id == id) return c;
    fail(ErrorCode::out_of_range, "no condition with id " + std::to_string(id));
}

void settle(Classification& c) {
    c.verdict = Verdict::characterized;
    c.violated = 0;
    for (const auto& cond : c.conditions) {
        if (!cond.holds) {
            c.verdict = Verdict::violates;
            c.violated = cond.id;
            return;
        }
    }
}

Counterexample make_collision(const QuadSeq& q, std::int64_t p, std::int64_t n, std::int64_t i,
                              std::int64_t j, std::string reason) {
    Counterexample cx{q, p, n, CounterexampleKind::collision_at_prime_power, {}, {},
                      std::move(reason)};
    cx.collision = PairWitness{ceil_power(p, n), i, j, {n, false}};
    return cx;
}

Counterexample make_smaller(const QuadSeq& q, std::int64_t p, std::int64_t n, std::int64_t r,
                            std::string reason) {
    Counterexample cx{q, p, n, CounterexampleKind::smaller_discriminator_exists, {}, {},
                      std::move(reason)};
    cx.smaller = SmallerDiscriminator{r, false, CheckMode::exhaustive};
    return cx;
}

bool verify(const Counterexample& cx) {
    if (cx.n < 1 || cx.p < 2) return false;
    const std::int64_t target = ceil_power(cx.p, cx.n);
    switch (cx.kind) {
    case CounterexampleKind::collision_at_prime_power: {
        if (!cx.collision) return false;
        const PairWitness& w = *cx.collision;
        if (w.m != target || w.j >= cx.n) return false;
        return verify(cx.seq, w);
    }
    case CounterexampleKind::smaller_discriminator_exists: {
        if (!cx.smaller) return false;
        const std::int64_t r = cx.smaller->r;
        if (r < 1 || r >= target) return false;
        if (cx.n > kExhaustiveTerms)
            fail(ErrorCode::out_of_range, "prefix of " + std::to_string(cx.n) +
                                              " terms is too long for an exhaustive check");
        return discriminates(Terms::prefix(cx.seq, cx.n), r);
    }
    }
    return false;
}

void ensure_verified(const QuadSeq& q, const PairWitness& w, const char* construction) {
    if (!verify(q, w))
        fail(ErrorCode::internal_contradiction,
             std::string(construction) + " produced a witness that does not verify: m=" +
                 std::to_string(w.m) + " i=" + std::to_string(w.i) + " j=" + std::to_string(w.j));
}

void ensure_verified(const Counterexample& cx, const char* construction) {
    if (!verify(cx))
        fail(ErrorCode::internal_contradiction,
             std::string(construction) + " produced a counterexample that does not verify at n=" +
                 std::to_string(cx.n));
}

} // namespace disclab::witness

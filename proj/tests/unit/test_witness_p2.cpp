#include "doctest.h"

#include "disclab/error.hpp"
#include "disclab/witness/general.hpp"
#include "disclab/witness/p2.hpp"
#include "oracle.hpp"

using namespace disclab;
using namespace disclab::witness;

namespace {

// m | q(j) - q(i), evaluated independently.
bool divides_difference(std::int64_t a2, std::int64_t b2, const PairWitness& w) {
    return oracle::residue(oracle::eval(a2, b2, 0, w.j) - oracle::eval(a2, b2, 0, w.i), w.m) == 0;
}

} // namespace

TEST_CASE("integer classifier reads off alpha = 2^t r") {
    const Classification c = classify_p2_integer(6, 3);
    CHECK(c.verdict == Verdict::characterized);
    CHECK(c.two_adic->t == 1);
    CHECK(c.two_adic->r == 3);
    CHECK(classify_p2_integer(3, 1).violated == 1);
    CHECK(classify_p2_integer(4, 2).violated == 2);
    CHECK(classify_p2_integer(12, 1).violated == 3);
    CHECK(classify_p2_integer(-8, 5).verdict == Verdict::characterized);
    CHECK_THROWS_AS(classify_p2_integer(0, 1), Error);
}

TEST_CASE("half-integer classifier") {
    CHECK(classify_p2_half(1, 1).verdict == Verdict::characterized);
    const Classification c = classify_p2_half(3, 5);
    CHECK(c.verdict == Verdict::violates);
    CHECK_FALSE(c.degenerate);
    CHECK(classify_p2_half(3, -3).degenerate);
    CHECK_THROWS_AS(classify_p2_half(2, 1), Error);
}

TEST_CASE("half-integer collision for a != +-b") {
    const Counterexample cx = p2_half_counterexample(3, 5);
    CHECK(cx.n == 8);
    CHECK(cx.collision->m == 8);
    CHECK(cx.collision->i == 2);
    CHECK(cx.collision->j == 7);
    for (std::int64_t a = -31; a <= 31; a += 2)
        for (std::int64_t b = -31; b <= 31; b += 2) {
            if (a == b || a == -b) {
                CHECK_THROWS_AS(p2_half_counterexample(a, b), Error);
                continue;
            }
            const Counterexample x = p2_half_counterexample(a, b);
            CHECK(verify(x));
            CHECK(divides_difference(a, b, *x.collision));
            CHECK(x.collision->j < x.n);
        }
}

TEST_CASE("lower-bound witnesses for 2^t n^2 + b n") {
    for (int t = 1; t <= 5; ++t)
        for (std::int64_t b = -33; b <= 33; b += 2)
            for (int k = 0; k <= 7; ++k)
                for (std::int64_t m = 1; m < ipow(2, k + 1); ++m) {
                    const PairWitness w = p2_lower_witness(t, b, k, m);
                    REQUIRE(w.i >= 0);
                    REQUIRE(w.i < w.j);
                    REQUIRE(w.j <= ipow(2, k));
                    REQUIRE(divides_difference(2 * ipow(2, t), 2 * b, w));
                }
    CHECK_THROWS_AS(p2_lower_witness(1, 2, 3, 5), Error);
    CHECK_THROWS_AS(p2_lower_witness(1, 1, 3, 16), Error);
}

TEST_CASE("lower-bound witnesses for the triangular numbers") {
    CHECK(tr_lower_witness(2, 7) == PairWitness{7, 2, 4, {4, true}});
    for (int k = 0; k <= 12; ++k)
        for (std::int64_t m = 1; m < ipow(2, k + 1); ++m) {
            const PairWitness w = tr_lower_witness(k, m);
            REQUIRE(w.j <= ipow(2, k));
            // Every construction makes the difference exactly m.
            REQUIRE(oracle::eval(1, 1, 0, w.j) - oracle::eval(1, 1, 0, w.i) == m);
        }
}

TEST_CASE("upper bound holds for characterized sequences and fails otherwise") {
    for (int k = 0; k <= 8; ++k) {
        CHECK(upper_bound_check_p2(QuadSeq::integer(4, 3), k));
        CHECK(upper_bound_check_p2(QuadSeq::triangular(), k));
    }
    CHECK_FALSE(upper_bound_check_p2(QuadSeq::integer(2, 2), 2));
    CHECK_FALSE(upper_bound_check_p2(QuadSeq::integer(1, -1), 0));
}

TEST_CASE("shifting preserves the discriminator of characterized integer sequences") {
    const QuadSeq qs[] = {QuadSeq::integer(2, 1), QuadSeq::integer(4, -3), QuadSeq::integer(6, -9, 4)};
    for (const QuadSeq& q : qs)
        for (std::int64_t c : {-7, -1, 3, 40}) {
            const QuadSeq s = shift(q, c);
            for (std::int64_t n = 0; n < 30; ++n) CHECK(eval(s, n) == eval(q, n + c));
            CHECK(discriminator_table(s, 64).entries == discriminator_table(q, 64).entries);
        }
    // Triangular numbers are not shift-invariant.
    const QuadSeq t = shift(QuadSeq::triangular(), 1);
    CHECK(t == QuadSeq::half(1, 3, 1));
    CHECK(classify_p2_half(t.a2(), t.b2()).verdict == Verdict::violates);
    CHECK(discriminator_table(t, 8).at(8) != 8);
}

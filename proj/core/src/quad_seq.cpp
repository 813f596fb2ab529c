#include "disclab/quad_seq.hpp"

#include "disclab/error.hpp"

#include <utility>

namespace disclab {

namespace {

void check_coefficient(std::int64_t value, const char* name) {
    if (value >= kCoefficientLimit || value <= -kCoefficientLimit)
        fail(ErrorCode::overflow, std::string(name) + " = " + std::to_string(value) +
                                      " exceeds the coefficient limit 2^31");
}

void check_index(std::int64_t n) {
    if (n >= kIndexLimit || n <= -kIndexLimit)
        fail(ErrorCode::overflow, "index " + std::to_string(n) + " exceeds 2^31");
}

} // namespace

QuadSeq::QuadSeq(std::int64_t a2, std::int64_t b2, std::int64_t gamma,
                 std::optional<std::string> label)
    : a2_(a2), b2_(b2), gamma_(gamma), label_(std::move(label)) {
    check_coefficient(a2, "a2");
    check_coefficient(b2, "b2");
    check_coefficient(gamma, "gamma");
    require(a2 != 0, "quadratic coefficient must be nonzero");
    require((a2 - b2) % 2 == 0,
            "a2 and b2 must have equal parity for the sequence to be integer-valued");
}

QuadSeq QuadSeq::integer(std::int64_t alpha, std::int64_t beta, std::int64_t gamma) {
    return QuadSeq(checked_mul(alpha, std::int64_t{2}), checked_mul(beta, std::int64_t{2}),
                   gamma);
}

QuadSeq QuadSeq::half(std::int64_t a_odd, std::int64_t b_odd, std::int64_t gamma) {
    require(a_odd % 2 != 0 && b_odd % 2 != 0, "half-integer coefficients need odd numerators");
    return QuadSeq(a_odd, b_odd, gamma);
}

QuadSeq QuadSeq::triangular() { return QuadSeq(1, 1, 0, "triangular"); }

std::int64_t QuadSeq::alpha() const {
    require(has_integer_coefficients(), "alpha requested for a half-integer sequence");
    return a2_ / 2;
}

std::int64_t QuadSeq::beta() const {
    require(has_integer_coefficients(), "beta requested for a half-integer sequence");
    return b2_ / 2;
}

QuadSeq QuadSeq::with_gamma(std::int64_t gamma) const {
    return QuadSeq(a2_, b2_, gamma, label_);
}

QuadSeq QuadSeq::with_label(std::string label) const {
    return QuadSeq(a2_, b2_, gamma_, std::move(label));
}

wide_int eval(const QuadSeq& q, std::int64_t n) {
    check_index(n);
    const wide_int nn = n;
    const wide_int twice =
        checked_add(checked_mul(checked_mul(q.a2(), nn), nn), checked_mul(q.b2(), nn));
    // Exact: a2 n^2 + b2 n = n (a2 n + b2) is even under the parity invariant.
    return checked_add(twice / 2, q.gamma());
}

wide_int pair_difference(const QuadSeq& q, std::int64_t i, std::int64_t j) {
    require(i != j, "pair_difference needs distinct indices");
    check_index(i);
    check_index(j);
    const wide_int span = static_cast<wide_int>(j) - i;
    const wide_int factor =
        checked_add(checked_mul(q.a2(), static_cast<wide_int>(i) + j), q.b2());
    return checked_mul(span, factor) / 2;
}

QuadSeq scale(const QuadSeq& q, std::int64_t c) {
    require(c != 0, "scale factor must be nonzero");
    return QuadSeq(checked_mul(q.a2(), c), checked_mul(q.b2(), c), checked_mul(q.gamma(), c));
}

} // namespace disclab

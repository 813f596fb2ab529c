#pragma once

#include "disclab/arith.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace disclab {

/// An integer-valued quadratic q(n) = (a2/2) n^2 + (b2/2) n + gamma.
///
/// Coefficients are stored doubled so that integer and half-integer
/// coefficients share one exact representation: a2, b2 both even means
/// integer coefficients, both odd means odd multiples of 1/2. The parity
/// match is what makes q(n) an integer for every integer n.
///
/// Construction validates a2 != 0, the parity rule, and |a2|, |b2|, |gamma|
/// below kCoefficientLimit; violations throw ErrorCode::precondition (or
/// ErrorCode::overflow for the magnitude bound).
class QuadSeq {
public:
    QuadSeq(std::int64_t a2, std::int64_t b2, std::int64_t gamma,
            std::optional<std::string> label = std::nullopt);

    /// alpha n^2 + beta n + gamma with integer alpha, beta.
    static QuadSeq integer(std::int64_t alpha, std::int64_t beta, std::int64_t gamma = 0);

    /// (a_odd/2) n^2 + (b_odd/2) n + gamma; both arguments must be odd.
    static QuadSeq half(std::int64_t a_odd, std::int64_t b_odd, std::int64_t gamma = 0);

    /// n(n+1)/2.
    static QuadSeq triangular();

    std::int64_t a2() const noexcept { return a2_; }
    std::int64_t b2() const noexcept { return b2_; }
    std::int64_t gamma() const noexcept { return gamma_; }
    const std::optional<std::string>& label() const noexcept { return label_; }

    bool has_integer_coefficients() const noexcept { return a2_ % 2 == 0; }

    /// Coefficient of n^2 / n when has_integer_coefficients(); throws otherwise.
    std::int64_t alpha() const;
    std::int64_t beta() const;

    QuadSeq with_gamma(std::int64_t gamma) const;
    QuadSeq with_label(std::string label) const;

    friend bool operator==(const QuadSeq& a, const QuadSeq& b) noexcept {
        return a.a2_ == b.a2_ && a.b2_ == b.b2_ && a.gamma_ == b.gamma_;
    }

private:
    std::int64_t a2_;
    std::int64_t b2_;
    std::int64_t gamma_;
    std::optional<std::string> label_;
};

/// q(n), exact. |n| must stay below kIndexLimit.
wide_int eval(const QuadSeq& q, std::int64_t n);

/// q(j) - q(i) = (j - i)(a2 (i + j) + b2) / 2, computed without evaluating
/// either term. Requires i != j.
wide_int pair_difference(const QuadSeq& q, std::int64_t i, std::int64_t j);

/// n -> c * q(n). Requires c != 0 and the result within coefficient limits.
QuadSeq scale(const QuadSeq& q, std::int64_t c);

} // namespace disclab

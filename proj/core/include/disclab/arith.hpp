#pragma once

// Exact integer helpers. Sequence values live in 128-bit signed integers;
// moduli, indices and coefficients in 64-bit. Every operation that can leave
// its width reports ErrorCode::overflow instead of wrapping.

#include <cstdint>
#include <string>
#include <vector>

namespace disclab {

using wide_int = __int128;

inline constexpr std::int64_t kCoefficientLimit = std::int64_t{1} << 31;
inline constexpr std::int64_t kIndexLimit = std::int64_t{1} << 31;

std::string to_string(wide_int value);

wide_int checked_add(wide_int a, wide_int b);
wide_int checked_sub(wide_int a, wide_int b);
wide_int checked_mul(wide_int a, wide_int b);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Mixed widths promote to wide_int.
inline wide_int checked_add(wide_int a, std::int64_t b) { return checked_add(a, wide_int{b}); }
inline wide_int checked_add(std::int64_t a, wide_int b) { return checked_add(wide_int{a}, b); }
inline wide_int checked_sub(wide_int a, std::int64_t b) { return checked_sub(a, wide_int{b}); }
inline wide_int checked_sub(std::int64_t a, wide_int b) { return checked_sub(wide_int{a}, b); }
inline wide_int checked_mul(wide_int a, std::int64_t b) { return checked_mul(a, wide_int{b}); }
inline wide_int checked_mul(std::int64_t a, wide_int b) { return checked_mul(wide_int{a}, b); }

// Narrowing that throws when the value does not fit.
std::int64_t narrow(wide_int value);

// Canonical residue in [0, m). Requires m >= 1.
std::int64_t mod(wide_int value, std::int64_t m);
std::int64_t mod(std::int64_t value, std::int64_t m);

std::int64_t gcd(std::int64_t a, std::int64_t b);

struct ExtendedGcd {
    std::int64_t g;
    std::int64_t x;
    std::int64_t y;  // a*x + b*y == g
};
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

// Inverse of a modulo m in [0, m). Throws ErrorCode::precondition when
// gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

std::int64_t ipow(std::int64_t base, int exponent);

// Exponent of p in |n|; n must be nonzero.
int valuation(std::int64_t n, std::int64_t p);

// Smallest power of p that is >= n, i.e. p^ceil(log_p n); 1 for n == 1.
std::int64_t ceil_power(std::int64_t p, std::int64_t n);

// Exponent e with p^e == ceil_power(p, n).
int ceil_log(std::int64_t p, std::int64_t n);

bool is_power_of(std::int64_t n, std::int64_t p);

// Distinct prime divisors of |n| (n != 0), ascending, by trial division.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

// m = 2^x * 3^y * r with gcd(r, 6) == 1.
struct FactoredModulus {
    std::int64_t m;
    int x;
    int y;
    std::int64_t r;
};
FactoredModulus factor_2_3(std::int64_t m);

} // namespace disclab

#include "disclab/arith.hpp"

#include "disclab/error.hpp"

#include <algorithm>
#include <limits>

namespace disclab {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::precondition: return "precondition violated";
    case ErrorCode::overflow: return "arithmetic overflow";
    case ErrorCode::duplicate_term: return "duplicate term";
    case ErrorCode::search_exhausted: return "search exhausted";
    case ErrorCode::not_applicable: return "not applicable";
    case ErrorCode::out_of_range: return "out of range";
    case ErrorCode::internal_contradiction: return "internal contradiction";
    case ErrorCode::parse: return "parse error";
    }
    return "unknown error";
}

DuplicateTerm::DuplicateTerm(std::int64_t first, std::int64_t second)
    : Error(ErrorCode::duplicate_term,
            "terms " + std::to_string(first) + " and " + std::to_string(second) +
                " are equal; the prefix cannot be discriminated"),
      first_(first), second_(second) {}

SearchExhausted::SearchExhausted(int max_digits)
    : Error(ErrorCode::search_exhausted,
            "no qualifying prime with at most " + std::to_string(max_digits) +
                " trailing digits"),
      max_digits_(max_digits) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

std::string to_string(wide_int value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    // Work with the negative magnitude so INT128_MIN is representable.
    std::string digits;
    wide_int v = negative ? value : -value;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

namespace {

[[noreturn]] void overflow(const char* op) {
    fail(ErrorCode::overflow, std::string("integer overflow in ") + op);
}

} // namespace

wide_int checked_add(wide_int a, wide_int b) {
    wide_int r;
    if (__builtin_add_overflow(a, b, &r)) overflow("addition");
    return r;
}

wide_int checked_sub(wide_int a, wide_int b) {
    wide_int r;
    if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
    return r;
}

wide_int checked_mul(wide_int a, wide_int b) {
    wide_int r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow("addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
    return r;
}

std::int64_t narrow(wide_int value) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min())
        overflow("narrowing to 64 bits");
    return static_cast<std::int64_t>(value);
}

std::int64_t mod(wide_int value, std::int64_t m) {
    require(m >= 1, "modulus must be positive");
    wide_int r = value % m;
    if (r < 0) r += m;
    return static_cast<std::int64_t>(r);
}

std::int64_t mod(std::int64_t value, std::int64_t m) {
    return mod(static_cast<wide_int>(value), m);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    // std::gcd is undefined for INT64_MIN; inputs here are bounded well below.
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
    wide_int old_r = a, r = b;
    wide_int old_s = 1, s = 0;
    wide_int old_t = 0, t = 1;
    while (r != 0) {
        wide_int q = old_r / r;
        wide_int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {narrow(old_r), narrow(old_s), narrow(old_t)};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    require(m >= 1, "modulus must be positive");
    if (m == 1) return 0;
    const std::int64_t reduced = mod(a, m);
    const ExtendedGcd e = extended_gcd(reduced, m);
    if (e.g != 1)
        fail(ErrorCode::precondition, std::to_string(a) + " has no inverse modulo " +
                                          std::to_string(m));
    return mod(e.x, m);
}

std::int64_t ipow(std::int64_t base, int exponent) {
    require(exponent >= 0, "negative exponent");
    std::int64_t result = 1;
    for (int i = 0; i < exponent; ++i) result = checked_mul(result, base);
    return result;
}

int valuation(std::int64_t n, std::int64_t p) {
    require(n != 0, "valuation of zero");
    require(p >= 2, "valuation base must be >= 2");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::int64_t ceil_power(std::int64_t p, std::int64_t n) {
    require(p >= 2, "base must be >= 2");
    require(n >= 1, "ceil_power needs n >= 1");
    std::int64_t power = 1;
    while (power < n) power = checked_mul(power, p);
    return power;
}

int ceil_log(std::int64_t p, std::int64_t n) {
    require(p >= 2, "base must be >= 2");
    require(n >= 1, "ceil_log needs n >= 1");
    std::int64_t power = 1;
    int e = 0;
    while (power < n) {
        power = checked_mul(power, p);
        ++e;
    }
    return e;
}

bool is_power_of(std::int64_t n, std::int64_t p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    require(n != 0, "prime divisors of zero");
    if (n < 0) n = -n;
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

FactoredModulus factor_2_3(std::int64_t m) {
    require(m >= 1, "modulus must be positive");
    FactoredModulus f{m, 0, 0, m};
    while (f.r % 2 == 0) {
        f.r /= 2;
        ++f.x;
    }
    while (f.r % 3 == 0) {
        f.r /= 3;
        ++f.y;
    }
    return f;
}

} // namespace disclab

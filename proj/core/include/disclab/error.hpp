#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace disclab {

enum class ErrorCode {
    precondition,
    overflow,
    duplicate_term,
    search_exhausted,
    not_applicable,
    out_of_range,
    internal_contradiction,
    parse,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Two of the first N terms coincide, so no modulus can discriminate the prefix.
class DuplicateTerm : public Error {
public:
    DuplicateTerm(std::int64_t first, std::int64_t second);

    std::int64_t first() const noexcept { return first_; }
    std::int64_t second() const noexcept { return second_; }

private:
    std::int64_t first_;
    std::int64_t second_;
};

class SearchExhausted : public Error {
public:
    explicit SearchExhausted(int max_digits);

    int max_digits() const noexcept { return max_digits_; }

private:
    int max_digits_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool condition, const std::string& what) {
    if (!condition) fail(ErrorCode::precondition, what);
}

} // namespace disclab

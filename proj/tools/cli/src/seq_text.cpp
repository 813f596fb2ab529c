#include "disclab_cli/seq_text.hpp"

#include "disclab/error.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace disclab::cli {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
        if (s_.empty()) error("empty sequence");
    }

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    bool accept(char ch) {
        if (peek() != ch) return false;
        ++pos_;
        return true;
    }
    bool accept(std::string_view word) {
        if (s_.compare(pos_, word.size(), word) != 0) return false;
        pos_ += word.size();
        return true;
    }
    void expect(char ch) {
        if (!accept(ch)) error(std::string("expected '") + ch + "'");
    }

    std::optional<std::int64_t> integer() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) return std::nullopt;
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
        if (ec != std::errc() || v >= kCoefficientLimit) {
            pos_ = start;
            error("coefficient out of range");
        }
        return v;
    }

    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorCode::parse, "cannot parse sequence \"" + s_ + "\" at offset " +
                                   std::to_string(pos_) + ": " + what);
    }

private:
    std::string s_;
    std::size_t pos_ = 0;
};

struct Coefficient {
    std::int64_t value = 1;
    bool half = false;
    bool written = false;
};

int sign(Scanner& sc) {
    if (sc.accept('+')) return 1;
    if (sc.accept('-')) return -1;
    return 1;
}

Coefficient coefficient(Scanner& sc) {
    Coefficient c;
    if (sc.accept('(')) {
        const int s = sign(sc);
        const auto v = sc.integer();
        if (!v) sc.error("expected a number");
        c.value = s * *v;
        c.half = sc.accept("/2");
        sc.expect(')');
        c.written = true;
    } else if (const auto v = sc.integer()) {
        c.value = *v;
        c.half = sc.accept("/2");
        c.written = true;
    }
    return c;
}

} // namespace

QuadSeq parse_sequence(std::string_view text) {
    Scanner sc(text);
    std::optional<Coefficient> terms[3];  // constant, n, n^2
    bool first = true;
    while (!sc.done()) {
        int s = 1;
        if (!first && sc.peek() != '+' && sc.peek() != '-') sc.error("expected '+' or '-'");
        s = sign(sc);
        first = false;
        Coefficient c = coefficient(sc);
        c.value *= s;
        int power = 0;
        if (c.written) sc.accept('*');
        if (sc.accept('n')) {
            power = sc.accept("^2") ? 2 : 1;
        } else if (!c.written) {
            sc.error("expected a coefficient or n");
        }
        if (power == 0 && c.half) sc.error("the constant term must be an integer");
        if (terms[power]) sc.error("repeated power of n");
        terms[power] = c;
    }
    if (!terms[2]) sc.error("missing n^2 term");
    const Coefficient a = *terms[2];
    const Coefficient b = terms[1].value_or(Coefficient{0, a.half, false});
    if (terms[1] && a.half != b.half) sc.error("n^2 and n coefficients must both be halves or both integers");
    const std::int64_t gamma = terms[0] ? terms[0]->value : 0;
    try {
        if (a.half) return QuadSeq(a.value, b.value, gamma);
        return QuadSeq::integer(a.value, b.value, gamma);
    } catch (const Error& e) {
        sc.error(e.what());
    }
}

std::string render_sequence(const QuadSeq& q) {
    const bool half = !q.has_integer_coefficients();
    std::string out;
    auto term = [&](std::int64_t v, const char* var) {
        if (v == 0) return;
        const bool neg = v < 0;
        const std::int64_t mag = neg ? -v : v;
        if (neg) out += '-';
        else if (!out.empty()) out += '+';
        if (half && *var) {
            out += "(" + std::to_string(mag) + "/2)";
        } else if (mag != 1 || !*var) {
            out += std::to_string(mag);
        }
        out += var;
    };
    term(half ? q.a2() : q.a2() / 2, "n^2");
    term(half ? q.b2() : q.b2() / 2, "n");
    term(q.gamma(), "");
    return out;
}

} // namespace disclab::cli

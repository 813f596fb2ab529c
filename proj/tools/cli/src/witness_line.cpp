#include "disclab_cli/witness_line.hpp"

#include "disclab/error.hpp"
#include "disclab_cli/seq_text.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace disclab::cli {

namespace {

using Fields = std::map<std::string, std::string, std::less<>>;

[[noreturn]] void bad(std::string_view line, const std::string& what) {
    fail(ErrorCode::parse, "bad witness line \"" + std::string(line) + "\": " + what);
}

const std::string& field(const Fields& f, std::string_view line, const char* key) {
    const auto it = f.find(key);
    if (it == f.end()) bad(line, std::string("missing ") + key);
    return it->second;
}

std::int64_t number(const Fields& f, std::string_view line, const char* key) {
    const std::string& s = field(f, line, key);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) bad(line, std::string("bad number for ") + key);
    return v;
}

IndexBound bound(const Fields& f, std::string_view line) {
    const std::string& s = field(f, line, "bound");
    IndexBound b{0, true};
    std::string_view rest;
    if (s.rfind("j<=", 0) == 0) {
        rest = std::string_view(s).substr(3);
    } else if (s.rfind("j<", 0) == 0) {
        b.inclusive = false;
        rest = std::string_view(s).substr(2);
    } else {
        bad(line, "bound must read j<=L or j<L");
    }
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), b.limit);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) bad(line, "bad bound");
    return b;
}

} // namespace

std::string render_line(const QuadSeq& q, const PairWitness& w) {
    return "pair seq=" + render_sequence(q) + " m=" + std::to_string(w.m) +
           " i=" + std::to_string(w.i) + " j=" + std::to_string(w.j) + " bound=" + w.bound.describe();
}

std::string render_line(const witness::Counterexample& cx) {
    std::string out = "counterexample seq=" + render_sequence(cx.seq) + " p=" + std::to_string(cx.p) +
                      " n=" + std::to_string(cx.n) + " kind=" + witness::to_string(cx.kind);
    if (cx.collision) {
        out += " m=" + std::to_string(cx.collision->m) + " i=" + std::to_string(cx.collision->i) +
               " j=" + std::to_string(cx.collision->j);
    }
    if (cx.smaller) out += " r=" + std::to_string(cx.smaller->r);
    return out;
}

WitnessLine parse_line(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::string head, token;
    in >> head;
    Fields f;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0) bad(line, "expected key=value, got " + token);
        if (!f.emplace(token.substr(0, eq), token.substr(eq + 1)).second)
            bad(line, "repeated key " + token.substr(0, eq));
    }
    const QuadSeq seq = parse_sequence(field(f, line, "seq"));
    if (head == "pair") {
        return PairLine{seq, PairWitness{number(f, line, "m"), number(f, line, "i"),
                                         number(f, line, "j"), bound(f, line)}};
    }
    if (head != "counterexample") bad(line, "unknown record type " + head);
    const std::int64_t p = number(f, line, "p");
    const std::int64_t n = number(f, line, "n");
    if (p < 2 || n < 1) bad(line, "need p >= 2 and n >= 1");
    const std::string& kind = field(f, line, "kind");
    if (kind == "collision") {
        witness::Counterexample cx =
            witness::make_collision(seq, p, n, number(f, line, "i"), number(f, line, "j"), "");
        cx.collision->m = number(f, line, "m");
        return cx;
    }
    if (kind == "smaller") return witness::make_smaller(seq, p, n, number(f, line, "r"), "");
    bad(line, "unknown kind " + kind);
}

bool verify_line(const WitnessLine& line) {
    if (const auto* pair = std::get_if<PairLine>(&line)) return verify(pair->seq, pair->witness);
    return witness::verify(std::get<witness::Counterexample>(line));
}

} // namespace disclab::cli

#include "disclab_cli/commands.hpp"

#include "disclab/disclab.hpp"
#include "disclab_cli/report.hpp"
#include "disclab_cli/scan.hpp"
#include "disclab_cli/seq_text.hpp"
#include "disclab_cli/witness_line.hpp"

#include "CLI11.hpp"

#include <fmt/format.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace disclab::cli {

namespace {

using witness::Classification;
using witness::Verdict;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string format = "text";
    std::string path;

    void add(CLI::App* app) {
        app->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        app->add_option("--out", path, "Write output to this file instead of stdout");
    }

    Format parsed() const {
        if (format == "csv") return Format::csv;
        if (format == "json") return Format::json;
        return Format::text;
    }

    void write(const Report& report, std::ostream& out) const {
        if (path.empty()) {
            emit(report, parsed(), out);
            return;
        }
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file) throw IoError("cannot open " + path + " for writing");
        emit(report, parsed(), file);
        if (!file) throw IoError("cannot write " + path);
    }
};

// ---------------------------------------------------------------- compute

struct ComputeArgs {
    std::string seq;
    std::int64_t n = 0;
    std::optional<std::int64_t> against;
    std::string method = "incremental";
    Output output;
};

Report cmd_compute(const ComputeArgs& a) {
    const QuadSeq q = parse_sequence(a.seq);
    require(a.n >= 1, "--n must be >= 1");
    if (a.against)
        require(*a.against >= 2 && primes::is_prime(static_cast<std::uint64_t>(*a.against)),
                "--against must be prime");
    const DiscriminatorTable table =
        a.method == "oracle" ? oracle_table(q, a.n) : discriminator_table(q, a.n);

    Report r;
    const std::string seq = render_sequence(q);
    r.config = Json{{"command", "compute"}, {"seq", seq}, {"n", a.n}, {"method", a.method}};
    r.config["against"] = a.against ? Json(*a.against) : Json(nullptr);
    r.text = a.against ? fmt::format("seq={} against={}\n{:>8} {:>12} {:>12}  match\n", seq,
                                     *a.against, "n", "d", "target")
                       : fmt::format("seq={}\n{:>8} {:>12}\n", seq, "n", "d");
    std::int64_t mismatches = 0;
    for (const TableEntry& e : table.entries) {
        Json row = {{"n", e.n}, {"d", e.d}};
        if (a.against) {
            const std::int64_t target = ceil_power(*a.against, e.n);
            const bool match = target == e.d;
            mismatches += !match;
            row["target"] = target;
            row["match"] = match;
            r.text += fmt::format("{:>8} {:>12} {:>12}  {}\n", e.n, e.d, target, match ? "match" : "mismatch");
        } else {
            r.text += fmt::format("{:>8} {:>12}\n", e.n, e.d);
        }
        r.results.push_back(std::move(row));
    }
    r.summary = Json{{"rows", a.n}};
    if (a.against) {
        r.summary["mismatches"] = mismatches;
        r.text += fmt::format("mismatches={}\n", mismatches);
    }
    return r;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
    std::int64_t p = 0;
    std::string seq;
    std::optional<std::int64_t> alpha, beta, b, c;
    bool half = false;
    bool sufficient = false;
    Output output;
};

void add_classification(Report& r, const std::string& name, const std::string& seq,
                        const Classification& cls, bool triggers) {
    const std::string verdict =
        cls.verdict == Verdict::violates
            ? fmt::format("{} (condition {})", triggers ? "ruled out" : "violates", cls.violated)
            : witness::to_string(cls.verdict);
    r.text += fmt::format("{} p={} seq={}: {}\n", name, cls.p, seq, verdict);
    if (cls.two_adic) r.text += fmt::format("  t={} r={}\n", cls.two_adic->t, cls.two_adic->r);
    if (cls.three_split) r.text += fmt::format("  b={} c={}\n", cls.three_split->b, cls.three_split->c);
    for (const auto& cond : cls.conditions) {
        const char* mark = triggers ? (cond.holds ? "applies" : "  --   ") : (cond.holds ? "holds" : "FAILS");
        r.text += fmt::format("  [{}] {}. {}{}\n", mark, cond.id, cond.statement,
                              cond.detail.empty() ? "" : "  (" + cond.detail + ")");
        r.results.push_back(Json{{"classifier", name},
                                 {"p", cls.p},
                                 {"seq", seq},
                                 {"condition", cond.id},
                                 {"holds", cond.holds},
                                 {"statement", cond.statement},
                                 {"detail", cond.detail},
                                 {"moduli", cond.moduli}});
    }
    if (cls.degenerate) r.text += "  degenerate: " + cls.note + "\n";
    Json s = {{"verdict", witness::to_string(cls.verdict)}, {"violated", cls.violated}};
    if (cls.two_adic) s["two_adic"] = Json{{"t", cls.two_adic->t}, {"r", cls.two_adic->r}};
    if (cls.three_split) s["three_split"] = Json{{"b", cls.three_split->b}, {"c", cls.three_split->c}};
    s["degenerate"] = cls.degenerate;
    r.summary[name] = std::move(s);
}

Report cmd_classify(const ClassifyArgs& a) {
    require(a.p >= 2 && primes::is_prime(static_cast<std::uint64_t>(a.p)), "--p must be prime");
    Report r;
    r.config = Json{{"command", "classify"}, {"p", a.p}};

    if (a.sufficient) {
        require(a.p == 3, "--sufficient applies to p = 3");
        require(a.b && a.c, "--sufficient needs --b and --c");
        const QuadSeq q = QuadSeq::integer(checked_mul(std::int64_t{3}, *a.c), checked_mul(*a.b, *a.c));
        r.config["b"] = *a.b;
        r.config["c"] = *a.c;
        add_classification(r, "sufficient", render_sequence(q), witness::sufficient_p3(*a.b, *a.c), false);
        return r;
    }

    std::optional<QuadSeq> parsed;
    if (!a.seq.empty()) {
        parsed = parse_sequence(a.seq);
    } else {
        require(a.alpha && a.beta, "give --seq or --alpha and --beta");
        parsed = a.half ? QuadSeq::half(*a.alpha, *a.beta) : QuadSeq::integer(*a.alpha, *a.beta);
    }
    const QuadSeq q = *parsed;
    const std::string seq = render_sequence(q);
    r.config["seq"] = seq;
    const bool integer = q.has_integer_coefficients();

    if (a.p == 2) {
        if (integer) add_classification(r, "p2-integer", seq, witness::classify_p2_integer(q.alpha(), q.beta()), false);
        else add_classification(r, "p2-half", seq, witness::classify_p2_half(q.a2(), q.b2()), false);
        return r;
    }
    add_classification(r, "nonexistence", seq, witness::nonexistence_check(a.p, q), true);
    if (a.p == 3 && integer) {
        const Classification nec = witness::necessary_p3(q.alpha(), q.beta());
        add_classification(r, "necessary", seq, nec, false);
        if (nec.verdict == Verdict::characterized)
            add_classification(r, "sufficient", seq,
                               witness::sufficient_p3(nec.three_split->b, nec.three_split->c), false);
    }
    return r;
}

// ---------------------------------------------------------------- witness

struct WitnessArgs {
    std::string lemma;
    std::optional<std::int64_t> p, k, m, t, a, b, c, alpha, beta, ell;
    std::string seq;
    bool half = false;
    int max_digits = primes::kDefaultMaxDigits;
    Output output;
};

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag) {
    if (!v) fail(ErrorCode::precondition, std::string("--") + flag + " is required for this lemma");
    return *v;
}

int need_int(const std::optional<std::int64_t>& v, const char* flag) {
    const std::int64_t x = need(v, flag);
    require(x >= -1000 && x <= 1000, std::string("--") + flag + " is out of range");
    return static_cast<int>(x);
}

Report pair_report(Report r, const QuadSeq& q, const PairWitness& w, const std::string& note) {
    const std::string line = render_line(q, w);
    r.text = line + "\n" + (note.empty() ? "" : "# " + note + "\n");
    r.results.push_back(Json{{"line", line},
                             {"seq", render_sequence(q)},
                             {"m", w.m},
                             {"i", w.i},
                             {"j", w.j},
                             {"bound", w.bound.describe()}});
    r.summary = Json{{"verified", verify(q, w)}};
    if (!note.empty()) r.summary["note"] = note;
    return r;
}

Report counterexample_report(Report r, const witness::Counterexample& cx, Json extra) {
    const std::string line = render_line(cx);
    r.text = line + "\n# " + cx.reason + "\n";
    Json row = {{"line", line}, {"seq", render_sequence(cx.seq)}, {"p", cx.p}, {"n", cx.n},
                {"kind", witness::to_string(cx.kind)}};
    if (cx.collision) {
        row["m"] = cx.collision->m;
        row["i"] = cx.collision->i;
        row["j"] = cx.collision->j;
    }
    if (cx.smaller) {
        row["r"] = cx.smaller->r;
        row["check"] = cx.smaller->mode == witness::CheckMode::exhaustive ? "exhaustive"
                                                                           : "inequality_chain_sampled";
        r.text += fmt::format("# r < p^ceil(log_p n) = {}; check: {}\n", ceil_power(cx.p, cx.n),
                              row["check"].get<std::string>());
    }
    for (auto& [key, value] : extra.items()) {
        row[key] = value;
        r.text += fmt::format("# {}={}\n", key, value.dump());
    }
    r.results.push_back(std::move(row));
    r.summary = Json{{"reason", cx.reason}};
    return r;
}

Report cmd_witness(const WitnessArgs& a) {
    Report r;
    r.config = Json{{"command", "witness"}, {"lemma", a.lemma}};
    const std::string& L = a.lemma;
    if (L == "trlower") {
        return pair_report(std::move(r), QuadSeq::triangular(),
                           witness::tr_lower_witness(need_int(a.k, "k"), need(a.m, "m")), "");
    }
    if (L == "p2lower") {
        const int t = need_int(a.t, "t");
        const std::int64_t b = need(a.b, "b");
        return pair_report(std::move(r), QuadSeq::integer(ipow(2, t), b),
                           witness::p2_lower_witness(t, b, need_int(a.k, "k"), need(a.m, "m")), "");
    }
    if (L == "qtlower") {
        const std::int64_t b = need(a.b, "b"), c = need(a.c, "c");
        const auto traced = witness::qt_lower_witness_traced(b, c, need_int(a.k, "k"), need(a.m, "m"));
        return pair_report(std::move(r),
                           QuadSeq::integer(checked_mul(std::int64_t{3}, c), checked_mul(b, c)),
                           traced.witness, "case " + traced.label);
    }
    if (L == "general2") {
        const QuadSeq q = a.seq.empty() ? QuadSeq::integer(need(a.alpha, "alpha"), need(a.beta, "beta"))
                                        : parse_sequence(a.seq);
        return counterexample_report(std::move(r),
                                     witness::lemma2_witness(need(a.p, "p"), q, need_int(a.ell, "ell")),
                                     Json::object());
    }
    if (L == "p2half") {
        return counterexample_report(std::move(r),
                                     witness::p2_half_counterexample(need(a.a, "a"), need(a.b, "b")),
                                     Json::object());
    }
    if (L == "notqp") {
        const auto qp = primes::counterexample_qp(need(a.p, "p"), need_int(a.k, "k"), need(a.b, "b"),
                                                  need(a.c, "c"),
                                                  a.half ? primes::Scaling::half : primes::Scaling::integer,
                                                  a.max_digits);
        return counterexample_report(std::move(r), qp.counterexample,
                                     Json{{"u", qp.prime.u}, {"ell", qp.ell}, {"z", qp.z}});
    }
    if (L == "nonexist") {
        require(!a.seq.empty(), "--seq is required for this lemma");
        const QuadSeq q = parse_sequence(a.seq);
        return counterexample_report(
            std::move(r), witness::nonexistence_counterexample(need(a.p, "p"), q, a.ell ? need_int(a.ell, "ell") : 2),
            Json::object());
    }
    fail(ErrorCode::precondition, "unknown lemma " + L);
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string input;
    std::vector<std::string> lines;
    Output output;
};

Report cmd_verify(const VerifyArgs& a, bool& all_ok) {
    std::vector<std::string> lines = a.lines;
    if (lines.empty()) {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (!a.input.empty() && a.input != "-") {
            file.open(a.input);
            if (!file) throw IoError("cannot open " + a.input);
            in = &file;
        }
        for (std::string line; std::getline(*in, line);) lines.push_back(line);
    }
    Report r;
    r.config = Json{{"command", "verify"}};
    all_ok = true;
    std::int64_t checked = 0, failed = 0;
    for (const std::string& raw : lines) {
        const auto start = raw.find_first_not_of(" \t\r");
        if (start == std::string::npos || raw[start] == '#') continue;
        const std::string line = raw.substr(start, raw.find_last_not_of(" \t\r") - start + 1);
        const bool ok = verify_line(parse_line(line));
        ++checked;
        failed += !ok;
        all_ok = all_ok && ok;
        r.text += (ok ? "ok   " : "FAIL ") + line + "\n";
        r.results.push_back(Json{{"line", line}, {"verified", ok}});
    }
    r.summary = Json{{"checked", checked}, {"failed", failed}};
    r.text += fmt::format("checked={} failed={}\n", checked, failed);
    return r;
}

// ---------------------------------------------------------------- prime-search

struct PrimeSearchArgs {
    std::optional<std::int64_t> base, residue, leading, p, k, b;
    std::int64_t min_value = 0;
    int max_digits = primes::kDefaultMaxDigits;
    Output output;
};

Report cmd_prime_search(const PrimeSearchArgs& a) {
    primes::PrimeSearchSpec spec{};
    if (a.p) {
        const std::int64_t base = ipow(*a.p, need_int(a.k, "k"));
        const std::int64_t b = need(a.b, "b");
        spec = primes::PrimeSearchSpec::for_leading_max(base, mod(-b, base), std::max(a.min_value, b < 0 ? -b : b),
                                                        a.max_digits);
    } else {
        const std::int64_t base = need(a.base, "base");
        spec = {base, a.leading.value_or(base - 1), need(a.residue, "residue"), a.min_value, a.max_digits};
    }
    const primes::DigitPrime found = primes::find_digit_prime(spec);
    Report r;
    r.config = Json{{"command", "prime-search"}, {"base", spec.base}, {"leading_digit", spec.leading_digit},
                    {"residue", spec.residue}, {"min", spec.min_value}, {"max_digits", spec.max_digits}};
    r.results.push_back(Json{{"r", found.r}, {"u", found.u}});
    r.text = fmt::format("r={} u={}\n", found.r, found.u);
    return r;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
    ScanConfig config;
    std::string family = "integer";
    std::optional<std::int64_t> box;
    std::optional<std::int64_t> x_min, x_max, y_min, y_max;
    int jobs = 1;
    std::string cache;
    Output output;
};

void add_parallel(CLI::App* app, ScanArgs& s) {
    app->add_option("--jobs", s.jobs, "Worker threads")->check(CLI::Range(1, 1024));
    app->add_option("--cache", s.cache, "Resumable cache file (default: $DISCLAB_CACHE)");
}

ScanOptions scan_options(const ScanArgs& s) {
    ScanOptions o;
    o.jobs = s.jobs;
    std::string cache = s.cache;
    if (cache.empty())
        if (const char* env = std::getenv("DISCLAB_CACHE")) cache = env;
    if (!cache.empty()) o.cache = cache;
    return o;
}

Report cmd_scan(ScanArgs s) {
    s.config.family = parse_family(s.family);
    if (s.box) {
        require(*s.box >= 0, "--box must be nonnegative");
        s.config.x_min = s.config.y_min = -*s.box;
        s.config.x_max = s.config.y_max = *s.box;
    }
    if (s.x_min) s.config.x_min = *s.x_min;
    if (s.x_max) s.config.x_max = *s.x_max;
    if (s.y_min) s.config.y_min = *s.y_min;
    if (s.y_max) s.config.y_max = *s.y_max;
    return run_scan(s.config, scan_options(s));
}

Report cmd_conjecture(ScanArgs s, std::int64_t bound) {
    require(bound >= 1, "--bound must be >= 1");
    s.config.p = 3;
    s.config.family = Family::conjecture;
    s.config.x_min = s.config.y_min = -bound;
    s.config.x_max = s.config.y_max = bound;
    return run_scan(s.config, scan_options(s));
}

int exit_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::parse: return kParse;
    case ErrorCode::duplicate_term: return kDuplicate;
    case ErrorCode::overflow: return kOverflow;
    case ErrorCode::search_exhausted: return kSearchExhausted;
    case ErrorCode::precondition:
    case ErrorCode::not_applicable:
    case ErrorCode::out_of_range: return kPrecondition;
    case ErrorCode::internal_contradiction: return kInternal;
    }
    return kInternal;
}

} // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discriminators of quadratic sequences", "disclab"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c_compute = app.add_subcommand("compute", "Table of D(n) for n = 1..N");
    c_compute->add_option("--seq", compute.seq, "Sequence, e.g. \"3n^2+7n\" or \"(1/2)n^2+(1/2)n\"")->required();
    c_compute->add_option("--n", compute.n, "Number of terms")->required();
    c_compute->add_option("--against", compute.against, "Compare against p^ceil(log_p n)");
    c_compute->add_option("--method", compute.method, "incremental or oracle")
        ->check(CLI::IsMember({"incremental", "oracle"}));
    compute.output.add(c_compute);

    ClassifyArgs classify;
    auto* c_classify = app.add_subcommand("classify", "Condition-by-condition classification");
    c_classify->add_option("--p", classify.p, "Prime")->required();
    c_classify->add_option("--seq", classify.seq, "Sequence");
    c_classify->add_option("--alpha", classify.alpha, "n^2 coefficient (numerator with --half)");
    c_classify->add_option("--beta", classify.beta, "n coefficient (numerator with --half)");
    c_classify->add_flag("--half", classify.half, "Read --alpha and --beta as odd numerators over 2");
    c_classify->add_option("--b", classify.b, "b of 3c n^2 + bc n");
    c_classify->add_option("--c", classify.c, "c of 3c n^2 + bc n");
    c_classify->add_flag("--sufficient", classify.sufficient, "Check the p = 3 sufficient conditions for (b, c)");
    classify.output.add(c_classify);

    WitnessArgs wit;
    auto* c_witness = app.add_subcommand("witness", "Build and check an explicit witness");
    c_witness->add_option("--lemma", wit.lemma, "trlower, p2lower, qtlower, general2, p2half, notqp, nonexist")
        ->required()
        ->check(CLI::IsMember({"trlower", "p2lower", "qtlower", "general2", "p2half", "notqp", "nonexist"}));
    struct IntFlag {
        const char* flag;
        std::optional<std::int64_t>* slot;
        const char* help;
    };
    for (const IntFlag& f : std::initializer_list<IntFlag>{
             {"--p", &wit.p, "Prime (general2, notqp, nonexist)"},
             {"--k", &wit.k, "Level: j stays within p^k (trlower, p2lower, qtlower, notqp)"},
             {"--m", &wit.m, "Modulus to defeat (trlower, p2lower, qtlower)"},
             {"--t", &wit.t, "Exponent in 2^t n^2 + bn (p2lower)"},
             {"--a", &wit.a, "Odd n^2 numerator (p2half)"},
             {"--b", &wit.b, "b of 2^t n^2 + bn, 3c n^2 + bc n or p^k c n^2 + bc n; odd n numerator for p2half"},
             {"--c", &wit.c, "c of 3c n^2 + bc n (qtlower) or p^k c n^2 + bc n (notqp)"},
             {"--alpha", &wit.alpha, "n^2 coefficient (general2)"},
             {"--beta", &wit.beta, "n coefficient (general2)"},
             {"--ell", &wit.ell, "Collision level l >= 2 (general2, nonexist)"}})
        c_witness->add_option(f.flag, *f.slot, f.help);
    c_witness->add_option("--seq", wit.seq, "Sequence (general2, nonexist)");
    c_witness->add_flag("--half", wit.half, "notqp: halve the sequence");
    c_witness->add_option("--max-digits", wit.max_digits, "notqp: digit windows to search");
    wit.output.add(c_witness);

    VerifyArgs ver;
    auto* c_verify = app.add_subcommand("verify", "Re-check witness lines");
    c_verify->add_option("--in", ver.input, "File of witness lines (default: stdin)");
    c_verify->add_option("--line", ver.lines, "A witness line; repeatable");
    ver.output.add(c_verify);

    ScanArgs scan;
    auto* c_scan = app.add_subcommand("scan", "Classifier against engine over a coefficient box");
    c_scan->add_option("--p", scan.config.p, "Prime")->required();
    c_scan->add_option("--family", scan.family, "integer, half, p3bc")
        ->check(CLI::IsMember({"integer", "half", "p3bc"}));
    c_scan->add_option("--box", scan.box, "Both axes span [-B, B]");
    c_scan->add_option("--x-min", scan.x_min, "Lower bound of the first coefficient");
    c_scan->add_option("--x-max", scan.x_max, "Upper bound of the first coefficient");
    c_scan->add_option("--y-min", scan.y_min, "Lower bound of the second coefficient");
    c_scan->add_option("--y-max", scan.y_max, "Upper bound of the second coefficient");
    c_scan->add_option("--horizon", scan.config.horizon, "Largest n compared");
    add_parallel(c_scan, scan);
    scan.output.add(c_scan);

    ScanArgs conj;
    conj.config.horizon = 729;
    std::int64_t conj_bound = 9;
    auto* c_conj = app.add_subcommand("conjecture", "First divergence for (3c/2)n^2 + (bc/2)n");
    c_conj->add_option("--bound", conj_bound, "|b|, |c| <= bound");
    c_conj->add_option("--horizon", conj.config.horizon, "Largest n compared");
    add_parallel(c_conj, conj);
    conj.output.add(c_conj);

    PrimeSearchArgs ps;
    auto* c_prime = app.add_subcommand("prime-search", "Least prime with a given leading digit and residue");
    c_prime->add_option("--base", ps.base, "Digit base, >= 5");
    c_prime->add_option("--residue", ps.residue, "Required r mod base");
    c_prime->add_option("--leading", ps.leading, "Leading digit (default base - 1)");
    c_prime->add_option("--p", ps.p, "Use base p^k and residue -b mod p^k");
    c_prime->add_option("--k", ps.k, "Exponent with --p");
    c_prime->add_option("--b", ps.b, "Residue is -b mod p^k");
    c_prime->add_option("--min", ps.min_value, "r must exceed this");
    c_prime->add_option("--max-digits", ps.max_digits, "Largest number of base digits tried");
    ps.output.add(c_prime);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*c_compute) compute.output.write(cmd_compute(compute), out);
        else if (*c_classify) classify.output.write(cmd_classify(classify), out);
        else if (*c_witness) wit.output.write(cmd_witness(wit), out);
        else if (*c_scan) scan.output.write(cmd_scan(scan), out);
        else if (*c_conj) conj.output.write(cmd_conjecture(conj, conj_bound), out);
        else if (*c_prime) ps.output.write(cmd_prime_search(ps), out);
        else if (*c_verify) {
            bool all_ok = true;
            ver.output.write(cmd_verify(ver, all_ok), out);
            if (!all_ok) return kVerifyFailed;
        }
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace disclab::cli

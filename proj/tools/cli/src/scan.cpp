#include "disclab_cli/scan.hpp"

#include "disclab/discriminator.hpp"
#include "disclab/error.hpp"
#include "disclab/primes.hpp"
#include "disclab/witness/general.hpp"
#include "disclab/witness/p2.hpp"
#include "disclab/witness/p3.hpp"
#include "disclab_cli/cache.hpp"
#include "disclab_cli/seq_text.hpp"

#include <fmt/format.h>

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace disclab::cli {

namespace {

using witness::Classification;
using witness::Verdict;

struct Prediction {
    std::string verdict;  // match, diverge, unknown
    std::string basis;
};

std::string violated(const char* name, const Classification& c) {
    return fmt::format("{} violates condition {}", name, c.violated);
}

Prediction predict_integer(std::int64_t p, std::int64_t alpha, std::int64_t beta) {
    if (p == 2) {
        const auto c = witness::classify_p2_integer(alpha, beta);
        if (c.verdict == Verdict::characterized) return {"match", "p=2 integer classifier: characterized"};
        return {"diverge", violated("p=2 integer classifier", c)};
    }
    const auto nx = witness::nonexistence_check(p, QuadSeq::integer(alpha, beta));
    if (nx.verdict == Verdict::violates) return {"diverge", violated("non-existence check", nx)};
    if (p == 3) {
        const auto nec = witness::necessary_p3(alpha, beta);
        if (nec.verdict != Verdict::characterized) return {"diverge", violated("p=3 necessary conditions", nec)};
        const auto suf = witness::sufficient_p3(nec.three_split->b, nec.three_split->c);
        if (suf.verdict == Verdict::characterized) return {"match", "p=3 sufficient conditions hold"};
        return {"unknown", violated("p=3 sufficient conditions", suf)};
    }
    return {"unknown", "no argument applies"};
}

Prediction predict_half(std::int64_t p, std::int64_t a, std::int64_t b) {
    if (p == 2) {
        const auto c = witness::classify_p2_half(a, b);
        if (c.verdict == Verdict::characterized) return {"match", "p=2 half-integer classifier: characterized"};
        return {"diverge", violated("p=2 half-integer classifier", c)};
    }
    const auto nx = witness::qr_not_disc_check(p, a, b);
    if (nx.verdict == Verdict::violates) return {"diverge", violated("non-existence check", nx)};
    return {"unknown", "no argument applies"};
}

Prediction predict_bc(std::int64_t b, std::int64_t c) {
    const auto suf = witness::sufficient_p3(b, c);
    if (suf.verdict == Verdict::characterized) return {"match", "p=3 sufficient conditions hold"};
    const auto nec = witness::necessary_p3(3 * c, b * c);
    if (nec.verdict != Verdict::characterized) return {"diverge", violated("p=3 necessary conditions", nec)};
    return {"unknown", violated("p=3 sufficient conditions", suf)};
}

// Every cell carries the same keys, in the same order, so CSV rows line up.
Json blank_cell(std::int64_t x, std::int64_t y) {
    Json cell = Json::object();
    for (const char* key : {"x", "y", "skipped", "reason", "seq", "prediction", "basis", "observed",
                            "n", "d", "target", "duplicate_of", "agree"})
        cell[key] = nullptr;
    cell["x"] = x;
    cell["y"] = y;
    return cell;
}

Json skipped(Json cell, const std::string& reason) {
    cell["skipped"] = true;
    cell["reason"] = reason;
    return cell;
}

std::string repro(const std::string& seq, std::int64_t n, std::int64_t p) {
    return fmt::format("disclab compute --seq '{}' --n {} --against {}", seq, n, p);
}

} // namespace

const char* to_string(Family f) noexcept {
    switch (f) {
    case Family::integer: return "integer";
    case Family::half: return "half";
    case Family::p3bc: return "p3bc";
    case Family::conjecture: return "conjecture";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::integer, Family::half, Family::p3bc, Family::conjecture})
        if (name == to_string(f)) return f;
    fail(ErrorCode::parse, "unknown family " + name);
}

void ScanConfig::validate() const {
    require(p >= 2 && primes::is_prime(static_cast<std::uint64_t>(p)), "p must be prime");
    require(x_min <= x_max && y_min <= y_max, "box bounds must be ordered");
    for (std::int64_t v : {x_min, x_max, y_min, y_max})
        require(v > -kCoefficientLimit / 8 && v < kCoefficientLimit / 8, "box bound out of range");
    require(horizon >= 1 && horizon < kIndexLimit, "horizon must lie in [1, 2^31)");
    if (family == Family::p3bc || family == Family::conjecture)
        require(p == 3, "the p3bc and conjecture families use p = 3");
}

Json ScanConfig::to_json() const {
    return Json{{"p", p},           {"family", to_string(family)}, {"x_min", x_min},
                {"x_max", x_max},   {"y_min", y_min},              {"y_max", y_max},
                {"horizon", horizon}};
}

Json scan_cell(const ScanConfig& config, std::int64_t x, std::int64_t y) {
    Json cell = blank_cell(x, y);
    std::optional<QuadSeq> seq;
    Prediction prediction;
    try {
        switch (config.family) {
        case Family::integer:
            if (x == 0) return skipped(cell, "zero n^2 coefficient");
            seq = QuadSeq::integer(x, y);
            prediction = predict_integer(config.p, x, y);
            break;
        case Family::half:
            if (x % 2 == 0 || y % 2 == 0) return skipped(cell, "numerators must be odd");
            seq = QuadSeq::half(x, y);
            prediction = predict_half(config.p, x, y);
            break;
        case Family::p3bc:
            if (x == 0 || y == 0) return skipped(cell, "b and c must be nonzero");
            seq = QuadSeq::integer(checked_mul(std::int64_t{3}, y), checked_mul(x, y));
            prediction = predict_bc(x, y);
            break;
        case Family::conjecture:
            if (x % 2 == 0 || y % 2 == 0) return skipped(cell, "3c and bc must be odd");
            if ((x * y) % 3 == 0) return skipped(cell, "3 divides bc");
            seq = QuadSeq::half(checked_mul(std::int64_t{3}, y), checked_mul(x, y));
            prediction = predict_half(3, seq->a2(), seq->b2());
            break;
        }
    } catch (const Error& e) {
        return skipped(cell, std::string("error: ") + e.what());
    }

    cell["skipped"] = false;
    cell["seq"] = render_sequence(*seq);
    cell["prediction"] = prediction.verdict;
    cell["basis"] = prediction.basis;

    const PowerComparison cmp = compare_with_prime_power(*seq, config.p, config.horizon);
    switch (cmp.status) {
    case PowerComparison::Status::matches:
        cell["observed"] = "matches";
        break;
    case PowerComparison::Status::diverges:
        cell["observed"] = "diverges";
        cell["n"] = cmp.n;
        cell["d"] = cmp.d;
        cell["target"] = cmp.target;
        break;
    case PowerComparison::Status::duplicate:
        cell["observed"] = "duplicate";
        cell["n"] = cmp.n;
        cell["duplicate_of"] = cmp.duplicate_of;
        break;
    }
    const std::string& obs = cell["observed"].get_ref<const std::string&>();
    bool agree = true;
    if (prediction.verdict == "match") agree = obs == "matches";
    else if (prediction.verdict == "diverge") agree = obs != "matches";
    cell["agree"] = agree;
    return cell;
}

Report run_scan(const ScanConfig& config, const ScanOptions& options) {
    config.validate();
    const std::int64_t width = config.y_max - config.y_min + 1;
    const auto cells = static_cast<std::size_t>((config.x_max - config.x_min + 1) * width);

    Report report;
    report.config = config.to_json();
    report.config["command"] = config.family == Family::conjecture ? "conjecture" : "scan";

    std::vector<Json> results(cells);
    std::vector<bool> done(cells, false);
    std::optional<ScanCache> cache;
    if (options.cache) {
        cache.emplace(*options.cache, report.config);
        for (const auto& [index, result] : cache->records()) {
            if (index < cells) {
                results[index] = result;
                done[index] = true;
            }
        }
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t index = next.fetch_add(1);
            if (index >= cells) return;
            if (done[index]) continue;
            try {
                const auto i = static_cast<std::int64_t>(index);
                results[index] = scan_cell(config, config.x_min + i / width, config.y_min + i % width);
                if (cache) cache->append(index, results[index]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = cells;
                return;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const int jobs = std::max(1, options.jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::int64_t skipped_count = 0, agreements = 0, disagreements = 0;
    Json predicted = {{"match", 0}, {"diverge", 0}, {"unknown", 0}};
    Json observed = {{"matches", 0}, {"diverges", 0}, {"duplicate", 0}};
    std::string text = fmt::format("{} p={} x=[{},{}] y=[{},{}] horizon={}\n",
                                   report.config["command"].get<std::string>(), config.p,
                                   config.x_min, config.x_max, config.y_min, config.y_max,
                                   config.horizon);
    for (const Json& cell : results) {
        if (cell["skipped"].get<bool>()) {
            ++skipped_count;
            continue;
        }
        const std::string seq = cell["seq"].get<std::string>();
        const std::string pred = cell["prediction"].get<std::string>();
        const std::string obs = cell["observed"].get<std::string>();
        predicted[pred] = predicted[pred].get<std::int64_t>() + 1;
        observed[obs] = observed[obs].get<std::int64_t>() + 1;
        const bool agree = cell["agree"].get<bool>();
        agree ? ++agreements : ++disagreements;

        std::string outcome = obs == "matches"
                                  ? fmt::format("no divergence up to n={}", config.horizon)
                                  : obs == "diverges"
                                        ? fmt::format("first divergence n={} D={} target={}",
                                                      cell["n"].get<std::int64_t>(),
                                                      cell["d"].get<std::int64_t>(),
                                                      cell["target"].get<std::int64_t>())
                                        : fmt::format("repeated term at n={}", cell["n"].get<std::int64_t>());
        if (config.family == Family::conjecture || !agree)
            text += fmt::format("  {:<24} {:<8} {}{}\n", seq, pred, outcome, agree ? "" : "  DISAGREE");

        if (!agree) {
            const std::int64_t n = obs == "matches" ? config.horizon : cell["n"].get<std::int64_t>();
            report.findings.push_back(Json{{"type", "disagreement"},
                                           {"x", cell["x"]},
                                           {"y", cell["y"]},
                                           {"seq", seq},
                                           {"prediction", pred},
                                           {"basis", cell["basis"]},
                                           {"observed", obs},
                                           {"detail", outcome},
                                           {"repro", repro(seq, n, config.p)}});
        } else if (config.family == Family::conjecture && obs == "matches") {
            report.findings.push_back(Json{{"type", "no_counterexample_within_horizon"},
                                           {"x", cell["x"]},
                                           {"y", cell["y"]},
                                           {"seq", seq},
                                           {"horizon", config.horizon},
                                           {"repro", repro(seq, config.horizon, config.p)}});
        }
    }
    report.results = std::move(results);
    report.summary = Json{{"cells", static_cast<std::int64_t>(cells)},
                          {"evaluated", static_cast<std::int64_t>(cells) - skipped_count},
                          {"skipped", skipped_count},
                          {"agreements", agreements},
                          {"disagreements", disagreements},
                          {"predicted", predicted},
                          {"observed", observed}};
    text += fmt::format("cells={} evaluated={} skipped={} agreements={} disagreements={}\n", cells,
                        static_cast<std::int64_t>(cells) - skipped_count, skipped_count, agreements,
                        disagreements);
    text += fmt::format("observed: matches={} diverges={} duplicate={}\n",
                        observed["matches"].get<std::int64_t>(), observed["diverges"].get<std::int64_t>(),
                        observed["duplicate"].get<std::int64_t>());
    report.text = std::move(text);
    return report;
}

} // namespace disclab::cli

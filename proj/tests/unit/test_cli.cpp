#include "doctest.h"

#include "disclab/error.hpp"
#include "disclab/witness/p2.hpp"
#include "disclab_cli/cache.hpp"
#include "disclab_cli/commands.hpp"
#include "disclab_cli/scan.hpp"
#include "disclab_cli/seq_text.hpp"
#include "disclab_cli/witness_line.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace disclab;
using namespace disclab::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "disclab");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path temp_path(const std::string& name) {
    return fs::temp_directory_path() / ("disclab_test_" + std::to_string(::getpid()) + "_" + name);
}

} // namespace

TEST_CASE("sequence grammar") {
    CHECK(parse_sequence("3n^2+7n") == QuadSeq::integer(3, 7));
    CHECK(parse_sequence(" 3 n^2 + 7 n ") == QuadSeq::integer(3, 7));
    CHECK(parse_sequence("3*n^2 - 7*n + 2") == QuadSeq::integer(3, -7, 2));
    CHECK(parse_sequence("n^2-n") == QuadSeq::integer(1, -1));
    CHECK(parse_sequence("-n^2") == QuadSeq::integer(-1, 0));
    CHECK(parse_sequence("7n + 3n^2") == QuadSeq::integer(3, 7));
    CHECK(parse_sequence("(1/2)n^2+(1/2)n") == QuadSeq::triangular());
    CHECK(parse_sequence("1/2n^2+1/2n") == QuadSeq::triangular());
    CHECK(parse_sequence("(3/2)n^2+(-5/2)n+1") == QuadSeq::half(3, -5, 1));
    CHECK(parse_sequence("(3/2)n^2-(5/2)n+1") == QuadSeq::half(3, -5, 1));
    for (const char* bad : {"", "3n", "3n^2+", "3n^2 7n", "n^2+n^2", "(1/2)n^2", "3n^2+(1/2)n",
                            "n^2+(1/2)", "n^3", "x^2", "99999999999n^2"}) {
        try {
            parse_sequence(bad);
            FAIL("accepted ", bad);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::parse);
        }
    }
}

TEST_CASE("render and parse round-trip") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> d(-50, 50);
    for (int s = 0; s < 2000; ++s) {
        std::int64_t a2 = d(rng), b2 = d(rng);
        if (a2 == 0) continue;
        if ((a2 - b2) % 2 != 0) ++b2;
        const QuadSeq q(a2, b2, d(rng));
        const std::string text = render_sequence(q);
        CHECK(text.find(' ') == std::string::npos);
        CHECK(parse_sequence(text) == q);
    }
    CHECK(render_sequence(QuadSeq::integer(3, 7)) == "3n^2+7n");
    CHECK(render_sequence(QuadSeq::triangular()) == "(1/2)n^2+(1/2)n");
    CHECK(render_sequence(QuadSeq::integer(-1, 0, -4)) == "-n^2-4");
}

TEST_CASE("witness lines round-trip and re-verify") {
    const QuadSeq q = QuadSeq::triangular();
    const PairWitness w = witness::tr_lower_witness(3, 13);
    const std::string line = render_line(q, w);
    const WitnessLine parsed = parse_line(line);
    CHECK(std::get<PairLine>(parsed).witness == w);
    CHECK(verify_line(parsed));

    const witness::Counterexample cx = witness::p2_half_counterexample(3, 5);
    const std::string cline = render_line(cx);
    CHECK(cline == "counterexample seq=(3/2)n^2+(5/2)n p=2 n=8 kind=collision m=8 i=2 j=7");
    CHECK(verify_line(parse_line(cline)));
    CHECK_FALSE(verify_line(parse_line("counterexample seq=3n^2+7n p=3 n=4 kind=smaller r=8")));
    CHECK(verify_line(parse_line("counterexample seq=3n^2+7n p=3 n=4 kind=smaller r=7")));
    CHECK_THROWS_AS(parse_line("pair seq=3n^2 m=2"), Error);
    CHECK_THROWS_AS(parse_line("triple seq=3n^2 m=2 i=0 j=1 bound=j<=2"), Error);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"compute", "--seq", "3n^2+7n", "--n", "4"}).code == kOk);
    CHECK(run_cli({"compute", "--seq", "3n^^2", "--n", "4"}).code == kParse);
    CHECK(run_cli({"compute", "--seq", "n^2-n", "--n", "2"}).code == kDuplicate);
    CHECK(run_cli({"compute", "--seq", "2147483647n^2", "--n", "3"}).code == kParse);
    CHECK(run_cli({"compute", "--seq", "n^2", "--n", "3000000000"}).code == kPrecondition);
    CHECK(run_cli({"compute", "--seq", "n^2", "--n", "5", "--against", "4"}).code == kPrecondition);
    CHECK(run_cli({"compute"}).code == kUsage);
    CHECK(run_cli({"nonsense"}).code == kUsage);
    CHECK(run_cli({"--help"}).code == kOk);
    CHECK(run_cli({"prime-search", "--base", "5", "--residue", "4", "--min", "1", "--max-digits", "1"}).code ==
          kSearchExhausted);
    CHECK(run_cli({"witness", "--lemma", "general2", "--p", "2", "--alpha", "18", "--beta", "3", "--ell", "2"}).code ==
          kPrecondition);
    CHECK(run_cli({"verify", "--line", "pair seq=3n^2+n m=8 i=0 j=4 bound=j<=9"}).code == kVerifyFailed);
    CHECK(run_cli({"verify", "--in", "/nonexistent/witnesses.txt"}).code == kIo);
    CHECK(run_cli({"compute", "--seq", "n^2", "--n", "3", "--out", "/nonexistent/dir/out.txt"}).code == kIo);
}

TEST_CASE("overflow is reported with its own exit code") {
    const Run r = run_cli({"witness", "--lemma", "notqp", "--p", "3", "--k", "30", "--b", "1", "--c", "1"});
    CHECK(r.code == kOverflow);
}

TEST_CASE("compute output forms") {
    const Run text = run_cli({"compute", "--seq", "3n^2+7n", "--n", "4", "--against", "3"});
    CHECK(text.out.find("       4            7            9  mismatch") != std::string::npos);
    const Run csv = run_cli({"compute", "--seq", "3n^2+7n", "--n", "4", "--against", "3", "--format", "csv"});
    CHECK(csv.out == "n,d,target,match\n1,1,1,true\n2,3,3,true\n3,3,3,true\n4,7,9,false\n");
    const Run json = run_cli({"compute", "--seq", "3n^2+7n", "--n", "4", "--format", "json"});
    const Json doc = Json::parse(json.out);
    CHECK(doc["results"][3]["d"] == 7);
    CHECK(doc.contains("findings"));
    CHECK(doc["summary"]["rows"] == 4);
}

TEST_CASE("large numbers become strings in JSON") {
    CHECK(json_number(wide_int{1} << 52).is_number());
    CHECK(json_number(-(wide_int{1} << 52)).is_number());
    CHECK(json_number(wide_int{1} << 53) == "9007199254740992");
    CHECK(json_number(-(wide_int{1} << 70)) == "-1180591620717411303424");
}

TEST_CASE("witness subcommand output can be fed to verify") {
    for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
             {"--lemma", "trlower", "--k", "2", "--m", "7"},
             {"--lemma", "p2lower", "--t", "2", "--b", "3", "--k", "4", "--m", "21"},
             {"--lemma", "qtlower", "--b", "1", "--c", "1", "--k", "3", "--m", "35"},
             {"--lemma", "general2", "--p", "2", "--alpha", "1", "--beta", "1", "--ell", "2"},
             {"--lemma", "p2half", "--a", "3", "--b", "5"},
             {"--lemma", "notqp", "--p", "5", "--k", "1", "--b", "1", "--c", "1"},
             {"--lemma", "nonexist", "--p", "7", "--seq", "3n^2+n"}}) {
        args.insert(args.begin(), "witness");
        const Run w = run_cli(args);
        REQUIRE(w.code == kOk);
        const auto first_line = w.out.substr(0, w.out.find('\n'));
        const Run v = run_cli({"verify", "--line", first_line});
        CHECK_MESSAGE(v.code == kOk, first_line);
    }
    CHECK(run_cli({"witness", "--lemma", "trlower", "--k", "2", "--m", "7"}).out.rfind(
              "pair seq=(1/2)n^2+(1/2)n m=7 i=2 j=4 bound=j<=4\n", 0) == 0);
    const Run notqp = run_cli({"witness", "--lemma", "notqp", "--p", "5", "--k", "1", "--b", "1", "--c", "1"});
    CHECK(notqp.out.rfind("counterexample seq=5n^2+n p=5 n=26 kind=smaller r=109\n", 0) == 0);
}

TEST_CASE("scans are deterministic across worker counts") {
    ScanConfig config;
    config.p = 2;
    config.x_min = config.y_min = -12;
    config.x_max = config.y_max = 12;
    config.horizon = 64;
    std::ostringstream one, four;
    emit(run_scan(config, {1, std::nullopt}), Format::json, one);
    emit(run_scan(config, {4, std::nullopt}), Format::json, four);
    CHECK(one.str() == four.str());
    std::ostringstream csv1, csv4;
    emit(run_scan(config, {1, std::nullopt}), Format::csv, csv1);
    emit(run_scan(config, {3, std::nullopt}), Format::csv, csv4);
    CHECK(csv1.str() == csv4.str());
}

TEST_CASE("scan summary counts add up") {
    ScanConfig config;
    config.p = 3;
    config.family = Family::p3bc;
    config.x_min = -2;
    config.x_max = 10;
    config.y_min = -5;
    config.y_max = 5;
    config.horizon = 81;
    const Report r = run_scan(config, {2, std::nullopt});
    const Json& s = r.summary;
    CHECK(s["cells"].get<std::int64_t>() == static_cast<std::int64_t>(r.results.size()));
    CHECK(s["evaluated"].get<std::int64_t>() + s["skipped"].get<std::int64_t>() == s["cells"].get<std::int64_t>());
    CHECK(s["agreements"].get<std::int64_t>() + s["disagreements"].get<std::int64_t>() ==
          s["evaluated"].get<std::int64_t>());
    std::int64_t predicted = 0;
    for (const auto& [k, v] : s["predicted"].items()) predicted += v.get<std::int64_t>();
    CHECK(predicted == s["evaluated"].get<std::int64_t>());
    CHECK(s["disagreements"] == 0);
    CHECK(static_cast<std::int64_t>(r.findings.size()) == s["disagreements"].get<std::int64_t>());
}

TEST_CASE("cache resumes and truncates a corrupted tail") {
    const fs::path cache = temp_path("cache.txt");
    fs::remove(cache);
    ScanConfig config;
    config.p = 2;
    config.x_min = config.y_min = -6;
    config.x_max = config.y_max = 6;
    config.horizon = 32;
    std::ostringstream fresh;
    emit(run_scan(config, {2, cache}), Format::json, fresh);
    const std::string full = slurp(cache);
    CHECK(std::count(full.begin(), full.end(), '\n') == 1 + 13 * 13);

    // Keep the header and ten records, then append garbage.
    std::size_t pos = 0;
    for (int line = 0; line < 11; ++line) pos = full.find('\n', pos) + 1;
    {
        std::ofstream out(cache, std::ios::binary | std::ios::trunc);
        out << full.substr(0, pos) << "17\t{\"x\":1}\tdeadbeef\npartial";
    }
    { ScanCache loaded(cache, [&] {
          Json c = config.to_json();
          c["command"] = "scan";
          return c;
      }());
        CHECK(loaded.records().size() == 10);
    }
    CHECK(fs::file_size(cache) == pos);

    std::ostringstream resumed;
    emit(run_scan(config, {3, cache}), Format::json, resumed);
    CHECK(resumed.str() == fresh.str());

    // A different configuration starts the file over.
    config.horizon = 16;
    run_scan(config, {1, cache});
    const std::string restarted = slurp(cache);
    CHECK(restarted.substr(0, restarted.find('\n')) != full.substr(0, full.find('\n')));
    CHECK(std::count(restarted.begin(), restarted.end(), '\n') == 1 + 13 * 13);
    fs::remove(cache);
}

TEST_CASE("cache path defaults to DISCLAB_CACHE") {
    const fs::path cache = temp_path("env_cache.txt");
    fs::remove(cache);
    ::setenv("DISCLAB_CACHE", cache.c_str(), 1);
    const Run r = run_cli({"conjecture", "--bound", "3", "--horizon", "27", "--format", "json"});
    ::unsetenv("DISCLAB_CACHE");
    CHECK(r.code == kOk);
    CHECK(fs::exists(cache));
    fs::remove(cache);
}

TEST_CASE("conjecture report matches the golden file") {
    const Run r = run_cli({"conjecture", "--bound", "5", "--horizon", "243", "--format", "json", "--jobs", "3"});
    REQUIRE(r.code == kOk);
    const std::string golden = slurp(fs::path(DISCLAB_GOLDEN_DIR) / "conjecture_b5_h243.json");
    CHECK(r.out == golden);
    const Json doc = Json::parse(r.out);
    bool skipped_for_three = false;
    for (const Json& cell : doc["results"])
        if (cell["skipped"].get<bool>() && cell["reason"] == "3 divides bc") skipped_for_three = true;
    CHECK(skipped_for_three);
}

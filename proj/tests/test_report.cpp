#include <sstream>

#include "doctest.h"
#include "seshcert/cli.hpp"

using namespace seshcert;

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

CertificateDocument make_doc(std::int64_t r, const Rational& delta, int threads) {
    RunConfig config;
    config.r = r;
    config.delta = delta;
    config.threads = threads;
    CertificateDocument doc;
    doc.config = config;
    VerifyOptions opts;
    opts.threads = threads;
    doc.certificate = verify_delta(r, delta, config.filters, opts);
    doc.timings_ms["total"] = 12.5;
    return doc;
}

}  // namespace

TEST_CASE("certificate json schema") {
    const auto text = emit_certificate(make_doc(2, Rational(31, 1000), 1), Format::json);
    CHECK(text.find("\"verdict\": \"PASS\"") != std::string::npos);
    CHECK(text.find("\"survivors\": []") != std::string::npos);
    // Fixed key order.
    std::size_t last = 0;
    for (const char* key : {"schema_version", "tool_version", "config", "verdict", "k_max", "filters",
                            "all_ones_record", "roth_c_record", "excluded", "survivors",
                            "threshold_rejection_counts", "timings_ms"}) {
        const auto pos = text.find("\"" + std::string(key) + "\":", last);
        REQUIRE(pos != std::string::npos);
        last = pos;
    }
}

TEST_CASE("certificate round trip") {
    for (auto [r, delta] : {std::pair<long, Rational>{2, Rational(1, 100)}, {3, Rational(18, 1000)}}) {
        const auto doc = make_doc(r, delta, 1);
        const auto text = emit_certificate(doc, Format::json);
        const auto parsed = parse_certificate(text);
        CHECK(parsed == doc);
        CHECK(emit_certificate(parsed, Format::json) == text);
    }
    CHECK_THROWS(parse_certificate("{}"));
}

TEST_CASE("certificates are deterministic across runs and thread counts") {
    const auto a = emit_certificate(make_doc(2, Rational(1, 100), 1), Format::json);
    const auto b = emit_certificate(make_doc(2, Rational(1, 100), 4), Format::json);
    CHECK(canonical_without_timings(a) == canonical_without_timings(b));
}

TEST_CASE("certificate csv and markdown") {
    const auto doc = make_doc(2, Rational(1, 100), 1);
    const auto csv = emit_certificate(doc, Format::csv);
    CHECK(csv.rfind("k,m,M,case,f,status,ratio\n", 0) == 0);
    CHECK(csv.find("7,5,5,F1,-2,survivor,7/10") != std::string::npos);
    const auto md = emit_certificate(doc, Format::md);
    CHECK(md.find("**FAIL**") != std::string::npos);
    CHECK(md.find("| 7 | 5 | 5 | 7/10 | F1 | -2 | survivor |") != std::string::npos);
}

TEST_CASE("table emission") {
    const auto md = emit_table(comparison_table(10, 16), Format::md, DigitMode::four);
    CHECK(md.find("| 10 | ≥ 0.3143 | ≥ 0.3149 |") != std::string::npos);
    CHECK(md.find("| 16 | 1/4 | 1/4 |") != std::string::npos);

    const auto paper = emit_table(comparison_table(2, 9), Format::md, DigitMode::paper);
    CHECK(paper.find("| 2 | 1/2 | > 0.69 |") != std::string::npos);
    CHECK(paper.find("| 5 | 2/5 | ≥ 0.44 |") != std::string::npos);

    const auto csv = emit_table(comparison_table(2, 16), Format::csv, DigitMode::four);
    CHECK(csv.rfind("r,p2_value,p2_kind,fpp_bound,fpp_kind,flags\n", 0) == 0);
    CHECK(csv.find("8,6/17,exact,≥ 0.3520,theorem_lower_bound,reference_mismatch:0.3391") != std::string::npos);

    CHECK(emit_table({}, Format::csv, DigitMode::four) == "r,p2_value,p2_kind,fpp_bound,fpp_kind,flags\n");
    CHECK(emit_table({}, Format::md, DigitMode::four) == "| r | ε(P², O(1); r) | ε(FPP, L₁; r) | flags |\n|---|---|---|---|\n");
}

TEST_CASE("cli exit statuses") {
    auto pass = cli({"verify", "--r", "2", "--delta", "0.031"});
    CHECK(pass.status == kExitOk);
    CHECK(pass.out.find("\"verdict\": \"PASS\"") != std::string::npos);

    auto fail = cli({"verify", "--r", "2", "--delta", "0.01"});
    CHECK(fail.status == kExitFail);
    CHECK(fail.err.find("(7, 5, 5, 7/10, F1, -2)") != std::string::npos);

    CHECK(cli({"cutoff", "--delta", "0.01"}).out == "50\n");
    CHECK(cli({"cutoff", "--delta", "1/100", "--format", "json"}).out.find("\"k_cutoff\": 50") != std::string::npos);

    CHECK(cli({"verify", "--r", "4", "--delta", "0.01"}).status == kExitUsage);
    CHECK(cli({"verify", "--r", "2", "--delta", "0.0x1"}).status == kExitUsage);
    CHECK(cli({"verify", "--r", "2"}).status == kExitUsage);
    CHECK(cli({"verify", "--bogus"}).status == kExitUsage);
    CHECK(cli({}).status == kExitUsage);
    CHECK(cli({"verify", "--r", "2", "--delta", "0.01", "--filters", "xu,nope"}).status == kExitUsage);
    CHECK(cli({"--help"}).status == kExitOk);
}

TEST_CASE("cli subcommands") {
    auto range = cli({"verify-range", "--r-from", "2", "--r-to", "9", "--threads", "2"});
    CHECK(range.status == kExitOk);
    CHECK(range.out.find("\"exact\": \"1/3\"") != std::string::npos);

    auto remark = cli({"verify-range", "--r-from", "20", "--r-to", "25", "--policy", "remark_tail", "--format", "csv"});
    CHECK(remark.status == kExitOk);
    CHECK(remark.out.find("22,13/1000,38,PASS,0,") != std::string::npos);
    CHECK(remark.out.find("23,1/100,49,PASS,0,") != std::string::npos);

    auto opt = cli({"optimize", "--r", "2", "--format", "text"});
    CHECK(opt.status == kExitOk);
    CHECK(opt.out.rfind("delta 31/1000", 0) == 0);

    auto cmp = cli({"compare", "--r-from", "22", "--r-to", "23"});
    CHECK(cmp.out.find("r=22 delta=13/1000 theorem_greater") != std::string::npos);
    CHECK(cmp.out.find("r=23 delta=13/1000 szsz_greater") != std::string::npos);

    auto tail = cli({"tail", "--kmax", "39"});
    CHECK(tail.status == kExitOk);
    CHECK(tail.out.rfind("1518\n", 0) == 0);

    auto table = cli({"table", "--r-from", "10", "--r-to", "10", "--format", "csv"});
    CHECK(table.out.find("10,≥ 0.3143,szsz_lower_bound,≥ 0.3149,theorem_lower_bound,") != std::string::npos);

    CHECK(cli({"verify", "--r", "2", "--delta", "0.031", "--out", "/nonexistent-dir/x.json"}).status == kExitUsage);
}

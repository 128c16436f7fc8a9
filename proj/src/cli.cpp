#include "seshcert/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

namespace seshcert {

namespace {

struct HelpRequested {
    std::string text;
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Rational parse_rational_arg(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

bool is_square(std::int64_t r) { return is_perfect_square(Integer(r)); }

std::string ordering_name(std::strong_ordering o) {
    if (o == std::strong_ordering::greater) return "theorem_greater";
    if (o == std::strong_ordering::less) return "szsz_greater";
    return "equal";
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Exact exclusion certificates for multipoint Seshadri bounds on fake projective planes", "seshcert"};
    app.require_subcommand(1, 1);

    std::optional<std::int64_t> r, r_from, r_to, k_max;
    std::optional<std::string> delta, policy, out_path;
    std::string grid = "1/1000", filters = "threshold,roth_def,xu", digits = "four";
    std::optional<std::string> format;
    bool full = false;
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    app.add_option("--r", r, "number of very general points");
    app.add_option("--r-from", r_from, "first r of a range");
    app.add_option("--r-to", r_to, "last r of a range");
    app.add_option("--delta", delta, "exact delta, e.g. 0.031 or 31/1000");
    app.add_option("--policy", policy, "delta policy for verify-range without --delta")
        ->check(CLI::IsMember({"theorem", "remark_tail"}));
    app.add_option("--kmax", k_max, "override k_max (verify) or the degree bound (tail)");
    app.add_option("--grid", grid, "grid step for optimize");
    app.add_option("--filters", filters, "comma list of threshold,roth_def,roth_b,xu (application order)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "md", "text"}));
    app.add_option("--digits", digits, "table digit mode")->check(CLI::IsMember({"four", "paper"}));
    app.add_flag("--full", full, "list threshold rejections individually");
    app.add_option("--out", out_path, "write the artifact to PATH");
    app.add_option("--threads", threads, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);

    for (const char* name : {"verify", "verify-range", "optimize", "cutoff", "table", "compare", "tail"})
        app.add_subcommand(name)->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig c;
    c.command = parse_command(app.get_subcommands().front()->get_name());
    c.r = r;
    c.r_from = r_from;
    c.r_to = r_to;
    c.k_max_override = k_max;
    c.policy = policy;
    c.full = full;
    c.output_path = out_path;
    c.threads = threads;
    c.digits = parse_digit_mode(digits);
    if (format) c.format = parse_format(*format);
    if (delta) c.delta = parse_rational_arg(*delta, "--delta");
    c.grid_step = parse_rational_arg(grid, "--grid");
    try {
        c.filters = FilterSet::parse(filters);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--filters: ") + e.what());
    }
    if (c.delta) require(*c.delta > 0, "--delta must be positive");
    require(c.grid_step > 0, "--grid must be positive");

    switch (c.command) {
        case Command::verify:
            require(c.r.has_value() && c.delta.has_value(), "verify needs --r and --delta");
            require(*c.r >= 2, "--r must be >= 2");
            require(!is_square(*c.r), "--r " + std::to_string(*c.r) + " is a perfect square; the value is exactly 1/s");
            if (c.k_max_override) require(*c.k_max_override >= 0, "--kmax must be >= 0");
            break;
        case Command::verify_range:
            require(c.r_from.has_value() && c.r_to.has_value(), "verify-range needs --r-from and --r-to");
            require(*c.r_from >= 2 && *c.r_from <= *c.r_to, "need 2 <= --r-from <= --r-to");
            break;
        case Command::optimize:
            require(c.r.has_value(), "optimize needs --r");
            require(*c.r >= 2 && !is_square(*c.r), "--r must be a non-square >= 2");
            break;
        case Command::cutoff: require(c.delta.has_value(), "cutoff needs --delta"); break;
        case Command::table:
            if (!c.r_from) c.r_from = 2;
            if (!c.r_to) c.r_to = 16;
            require(*c.r_from >= 2, "--r-from must be >= 2");
            break;
        case Command::compare:
            if (c.r) {
                require(*c.r >= 10 && !is_square(*c.r), "compare needs a non-square --r >= 10");
            } else {
                require(c.r_from.has_value() && c.r_to.has_value(), "compare needs --r or --r-from/--r-to");
                require(*c.r_from >= 10 && *c.r_from <= *c.r_to, "need 10 <= --r-from <= --r-to");
            }
            if (!c.delta) c.delta = Rational(13, 1000);
            break;
        case Command::tail:
            if (!c.k_max_override) c.k_max_override = 49;
            require(*c.k_max_override >= 2, "tail needs --kmax >= 2");
            break;
    }
    return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    std::string artifact;
    int status = kExitOk;
    VerifyOptions opts;
    opts.threads = c.threads;
    opts.full = c.full;

    switch (c.command) {
        case Command::verify: {
            opts.k_max = c.k_max_override;
            CertificateDocument doc;
            doc.config = c;
            doc.certificate = verify_delta(*c.r, *c.delta, c.filters, opts);
            doc.timings_ms["total"] = elapsed_ms(start);
            artifact = emit_certificate(doc, c.format.value_or(Format::json));
            if (!doc.certificate.pass()) {
                status = kExitFail;
                for (const auto& s : doc.certificate.survivors) err << "FAIL witness " << witness_line(s) << "\n";
            }
            break;
        }
        case Command::verify_range: {
            DeltaPolicy policy = c.delta                           ? DeltaPolicy::fixed(*c.delta)
                                 : c.policy.value_or("theorem") == "remark_tail" ? DeltaPolicy::remark_tail()
                                                                                 : DeltaPolicy::theorem();
            auto report = verify_range(*c.r_from, *c.r_to, policy, c.filters, opts);
            artifact = emit_range_report(report, c, c.format.value_or(Format::json), {{"total", elapsed_ms(start)}});
            if (!report.pass()) {
                status = kExitFail;
                for (const auto& e : report.entries)
                    if (!e.pass())
                        for (const auto& s : e.certificate->survivors)
                            err << "FAIL r=" << e.r << " witness " << witness_line(s) << "\n";
            }
            break;
        }
        case Command::optimize: {
            auto result = optimize_delta(*c.r, c.grid_step, c.filters, c.threads);
            artifact = emit_optimize(result, c, c.format.value_or(Format::json));
            break;
        }
        case Command::cutoff: {
            const auto k = k_cutoff(*c.delta);
            if (c.format.value_or(Format::text) == Format::json)
                artifact = "{\"delta\": \"" + rational_string(*c.delta) + "\", \"k_cutoff\": " + std::to_string(k) + "}\n";
            else
                artifact = std::to_string(k) + "\n";
            break;
        }
        case Command::table:
            artifact = emit_table(comparison_table(*c.r_from, *c.r_to), c.format.value_or(Format::md), c.digits);
            break;
        case Command::compare: {
            std::int64_t lo = c.r ? *c.r : *c.r_from, hi = c.r ? *c.r : *c.r_to;
            std::ostringstream os;
            const bool json = c.format.value_or(Format::text) == Format::json;
            if (json) os << "[\n";
            bool first = true;
            for (std::int64_t r = lo; r <= hi; ++r) {
                if (is_square(r)) continue;
                const auto o = compare_thm_vs_szsz(r, *c.delta);
                const auto thm = BoundValue::reciprocal_sqrt_shift(r, *c.delta).floor_decimal(4);
                const auto szsz = szsz_p2_bound(r).floor_decimal(4);
                if (json) {
                    os << (first ? "" : ",\n") << "  {\"r\": " << r << ", \"delta\": \"" << rational_string(*c.delta)
                       << "\", \"ordering\": \"" << ordering_name(o) << "\", \"theorem\": \"" << thm
                       << "\", \"szsz\": \"" << szsz << "\"}";
                } else {
                    os << "r=" << r << " delta=" << rational_string(*c.delta) << " " << ordering_name(o)
                       << " (theorem >= " << thm << ", szsz >= " << szsz << ")\n";
                }
                first = false;
            }
            if (json) os << "\n]\n";
            artifact = os.str();
            break;
        }
        case Command::tail: {
            const auto rec = tail_threshold(*c.k_max_override);
            const auto spot = xu_survivors(rec.r_threshold + 1, rec.k_max);
            std::ostringstream os;
            if (c.format.value_or(Format::text) == Format::json) {
                os << "{\"k_max\": " << rec.k_max << ", \"r_threshold\": " << rec.r_threshold << ", \"statement\": \""
                   << rec.statement << "\", \"spot_check\": {\"r\": " << rec.r_threshold + 1
                   << ", \"xu_survivors\": " << spot.size() << "}}\n";
            } else {
                os << rec.r_threshold << "\n"
                   << rec.statement << "\n"
                   << "spot check r=" << rec.r_threshold + 1 << ": " << spot.size() << " Xu-surviving patterns\n";
            }
            artifact = os.str();
            if (!spot.empty()) status = kExitFail;
            break;
        }
    }

    if (c.output_path) {
        std::ofstream file(*c.output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << *c.output_path << "\n";
            return kExitUsage;
        }
        file << artifact;
    } else {
        out << artifact;
    }
    return status;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(parse_args(args), out, err);
    } catch (const HelpRequested& h) {
        out << h.text;
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace seshcert

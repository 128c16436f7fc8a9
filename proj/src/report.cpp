#include "seshcert/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace seshcert {

using ojson = nlohmann::ordered_json;

namespace {

template <class E, std::size_t N>
E parse_enum(std::string_view name, const E (&values)[N], const char* what) {
    for (E v : values)
        if (to_string(v) == name) return v;
    throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

ojson opt_int(const std::optional<std::int64_t>& v) { return v ? ojson(*v) : ojson(nullptr); }

std::optional<std::int64_t> get_opt_int(const ojson& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::int64_t>();
}

std::string rational_ratio(const Candidate& c) { return rational_string(ratio(c.curve(), c.pattern)); }

ojson candidate_json(const Evaluation& e) {
    ojson j;
    j["k"] = e.candidate.k;
    j["m"] = e.candidate.m();
    j["M"] = e.candidate.big_m();
    j["case"] = std::string(to_string(e.candidate.case_id));
    j["f"] = e.f;
    return j;
}

Evaluation evaluation_from_json(const ojson& j, std::int64_t r, Status status) {
    auto c = Candidate::make(r, j.at("k").get<std::int64_t>(), j.at("m").get<std::int64_t>(),
                             j.at("M").get<std::int64_t>());
    if (to_string(c.case_id) != j.at("case").get<std::string>())
        throw std::invalid_argument("certificate: case label does not match pattern");
    return Evaluation{c, status, j.at("f").get<std::int64_t>()};
}

bool by_kmm(const Evaluation& a, const Evaluation& b) {
    return std::tuple(a.candidate.k, a.candidate.m(), a.candidate.big_m()) <
           std::tuple(b.candidate.k, b.candidate.m(), b.candidate.big_m());
}

ojson config_json(const RunConfig& c) {
    ojson j;
    j["command"] = std::string(to_string(c.command));
    j["r"] = opt_int(c.r);
    j["r_from"] = opt_int(c.r_from);
    j["r_to"] = opt_int(c.r_to);
    j["delta"] = c.delta ? ojson(rational_string(*c.delta)) : ojson(nullptr);
    j["policy"] = c.policy ? ojson(*c.policy) : ojson(nullptr);
    j["k_max_override"] = opt_int(c.k_max_override);
    ojson filters = ojson::array();
    for (Filter f : c.filters.order()) filters.push_back(std::string(to_string(f)));
    j["filters"] = filters;
    j["grid_step"] = rational_string(c.grid_step);
    j["format"] = c.format ? ojson(std::string(to_string(*c.format))) : ojson(nullptr);
    j["digits"] = std::string(to_string(c.digits));
    j["full"] = c.full;
    return j;
}

RunConfig config_from_json(const ojson& j) {
    RunConfig c;
    c.command = parse_command(j.at("command").get<std::string>());
    c.r = get_opt_int(j.at("r"));
    c.r_from = get_opt_int(j.at("r_from"));
    c.r_to = get_opt_int(j.at("r_to"));
    if (!j.at("delta").is_null()) c.delta = parse_rational(j.at("delta").get<std::string>());
    if (!j.at("policy").is_null()) c.policy = j.at("policy").get<std::string>();
    c.k_max_override = get_opt_int(j.at("k_max_override"));
    std::vector<Filter> order;
    for (const auto& f : j.at("filters")) order.push_back(parse_filter(f.get<std::string>()));
    c.filters = FilterSet(std::move(order));
    c.grid_step = parse_rational(j.at("grid_step").get<std::string>());
    if (!j.at("format").is_null()) c.format = parse_format(j.at("format").get<std::string>());
    c.digits = parse_digit_mode(j.at("digits").get<std::string>());
    c.full = j.at("full").get<bool>();
    return c;
}

ojson certificate_body(const ExclusionCertificate& cert) {
    ojson j;
    j["r"] = cert.r;
    j["delta"] = rational_string(cert.delta);
    j["k_cutoff"] = cert.k_cutoff;
    j["verdict"] = cert.pass() ? "PASS" : "FAIL";
    j["k_max"] = cert.k_max;
    ojson filters = ojson::array();
    for (Filter f : cert.filters.order()) filters.push_back(std::string(to_string(f)));
    j["filters"] = filters;
    j["beyond_paper"] = cert.filters.beyond_paper();
    j["all_ones_record"] = {{"r", cert.all_ones.r},
                            {"max_submaximal_k", cert.all_ones.max_submaximal_k},
                            {"min_dimension_k", cert.all_ones.min_dimension_k},
                            {"verified", cert.all_ones.verified}};
    ojson roth_c = ojson::array();
    for (const auto& rc : cert.roth_c)
        roth_c.push_back({{"k", rc.k}, {"self_intersection", rc.self_intersection}, {"impossible", rc.impossible}});
    j["roth_c_record"] = roth_c;

    auto excluded = cert.excluded;
    std::sort(excluded.begin(), excluded.end(), by_kmm);
    ojson ex = ojson::array();
    for (const auto& e : excluded) {
        ojson c = candidate_json(e);
        c["reason"] = std::string(to_string(e.status));
        ex.push_back(std::move(c));
    }
    j["excluded"] = ex;

    auto survivors = cert.survivors;
    std::sort(survivors.begin(), survivors.end(), by_kmm);
    ojson sv = ojson::array();
    for (const auto& e : survivors) {
        ojson c = candidate_json(e);
        c["ratio"] = rational_ratio(e.candidate);
        sv.push_back(std::move(c));
    }
    j["survivors"] = sv;

    ojson counts = ojson::array();
    for (const auto& [k, n] : cert.threshold_rejection_counts) counts.push_back({{"k", k}, {"count", n}});
    j["threshold_rejection_counts"] = counts;
    j["full"] = cert.full;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

}  // namespace

std::string_view to_string(Command c) {
    switch (c) {
        case Command::verify: return "verify";
        case Command::verify_range: return "verify-range";
        case Command::optimize: return "optimize";
        case Command::cutoff: return "cutoff";
        case Command::table: return "table";
        case Command::compare: return "compare";
        case Command::tail: return "tail";
    }
    return "?";
}

Command parse_command(std::string_view name) {
    static constexpr Command all[] = {Command::verify, Command::verify_range, Command::optimize, Command::cutoff,
                                      Command::table,  Command::compare,      Command::tail};
    return parse_enum(name, all, "command");
}

std::string_view to_string(Format f) {
    switch (f) {
        case Format::text: return "text";
        case Format::json: return "json";
        case Format::csv: return "csv";
        case Format::md: return "md";
    }
    return "?";
}

Format parse_format(std::string_view name) {
    static constexpr Format all[] = {Format::text, Format::json, Format::csv, Format::md};
    return parse_enum(name, all, "format");
}

std::string_view to_string(DigitMode d) { return d == DigitMode::four ? "four" : "paper"; }

DigitMode parse_digit_mode(std::string_view name) {
    static constexpr DigitMode all[] = {DigitMode::four, DigitMode::paper};
    return parse_enum(name, all, "digit mode");
}

bool operator==(const RunConfig& a, const RunConfig& b) { return config_json(a) == config_json(b); }

std::string witness_line(const Evaluation& e) {
    const auto& c = e.candidate;
    std::ostringstream os;
    os << "(" << c.k << ", " << c.m() << ", " << c.big_m() << ", " << rational_ratio(c) << ", "
       << to_string(c.case_id) << ", " << e.f << ")";
    return os.str();
}

std::string emit_certificate(const CertificateDocument& doc, Format format) {
    const auto& cert = doc.certificate;
    if (format == Format::json || format == Format::text) {
        ojson j;
        j["schema_version"] = doc.schema_version;
        j["tool_version"] = doc.tool_version;
        j["config"] = config_json(doc.config);
        const ojson body = certificate_body(cert);
        for (const auto& [key, value] : body.items()) j[key] = value;
        ojson timings = ojson::object();
        for (const auto& [name, ms] : doc.timings_ms) timings[name] = ms;
        j["timings_ms"] = timings;
        return j.dump(2) + "\n";
    }

    auto rows = cert.excluded;
    rows.insert(rows.end(), cert.survivors.begin(), cert.survivors.end());
    std::sort(rows.begin(), rows.end(), by_kmm);
    std::ostringstream os;
    if (format == Format::csv) {
        os << "k,m,M,case,f,status,ratio\n";
        for (const auto& e : rows)
            os << e.candidate.k << "," << e.candidate.m() << "," << e.candidate.big_m() << ","
               << to_string(e.candidate.case_id) << "," << e.f << "," << to_string(e.status) << ","
               << rational_ratio(e.candidate) << "\n";
        return os.str();
    }

    os << "# Exclusion certificate\n\n"
       << "- r: " << cert.r << "\n"
       << "- delta: " << rational_string(cert.delta) << "\n"
       << "- k_max: " << cert.k_max << " (cutoff " << cert.k_cutoff << ")\n"
       << "- filters: " << join(cert.filters.names(), ", ") << (cert.filters.beyond_paper() ? " (beyond paper)" : "")
       << "\n"
       << "- verdict: **" << (cert.pass() ? "PASS" : "FAIL") << "**\n\n";
    std::int64_t total = 0;
    for (const auto& kv : cert.threshold_rejection_counts) total += kv.second;
    os << "Threshold rejections: " << total << "; other exclusions: " << cert.excluded.size() << "\n\n";
    os << "| k | m | M | ratio | case | f | status |\n|---|---|---|---|---|---|---|\n";
    for (const auto& e : rows) {
        if (e.status == Status::above_threshold) continue;
        os << "| " << e.candidate.k << " | " << e.candidate.m() << " | " << e.candidate.big_m() << " | "
           << rational_ratio(e.candidate) << " | " << to_string(e.candidate.case_id) << " | " << e.f << " | "
           << to_string(e.status) << " |\n";
    }
    return os.str();
}

CertificateDocument parse_certificate(const std::string& json_text) {
    const ojson j = ojson::parse(json_text);
    CertificateDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.config = config_from_json(j.at("config"));

    auto& cert = doc.certificate;
    cert.r = j.at("r").get<std::int64_t>();
    cert.delta = parse_rational(j.at("delta").get<std::string>());
    cert.k_cutoff = j.at("k_cutoff").get<std::int64_t>();
    cert.k_max = j.at("k_max").get<std::int64_t>();
    std::vector<Filter> order;
    for (const auto& f : j.at("filters")) order.push_back(parse_filter(f.get<std::string>()));
    cert.filters = FilterSet(std::move(order));
    const auto& ao = j.at("all_ones_record");
    cert.all_ones = AllOnesRecord{ao.at("r").get<std::int64_t>(), ao.at("max_submaximal_k").get<std::int64_t>(),
                                  ao.at("min_dimension_k").get<std::int64_t>(), ao.at("verified").get<bool>()};
    for (const auto& rc : j.at("roth_c_record"))
        cert.roth_c.push_back(RothCRecord{rc.at("k").get<std::int64_t>(), rc.at("self_intersection").get<std::int64_t>(),
                                          rc.at("impossible").get<bool>()});
    for (const auto& e : j.at("excluded"))
        cert.excluded.push_back(evaluation_from_json(e, cert.r, parse_status(e.at("reason").get<std::string>())));
    for (const auto& e : j.at("survivors")) cert.survivors.push_back(evaluation_from_json(e, cert.r, Status::survivor));
    for (const auto& kc : j.at("threshold_rejection_counts"))
        cert.threshold_rejection_counts.emplace_back(kc.at("k").get<std::int64_t>(), kc.at("count").get<std::int64_t>());
    cert.full = j.at("full").get<bool>();
    if ((j.at("verdict").get<std::string>() == "PASS") != cert.pass())
        throw std::invalid_argument("certificate: verdict inconsistent with survivors");

    for (const auto& [name, ms] : j.at("timings_ms").items()) doc.timings_ms[name] = ms.get<double>();
    return doc;
}

std::string canonical_without_timings(const std::string& json_text) {
    ojson j = ojson::parse(json_text);
    j.erase("timings_ms");
    return j.dump(2);
}

std::string p2_cell(const TableRow& row, DigitMode) {
    if (auto q = row.p2.as_rational(); q && row.p2_kind == "exact") return rational_string_short(*q);
    return "≥ " + row.p2.floor_decimal(4);
}

std::string fpp_cell(const TableRow& row, DigitMode digits) {
    if (row.fpp_kind == "exact_square") return rational_string_short(*row.fpp.as_rational());
    if (digits == DigitMode::paper) {
        // Precision and relation as commonly printed for these rows.
        if (row.r == 2) return "> " + row.fpp.floor_decimal(2);
        if (row.r == 5) return "≥ " + row.fpp.floor_decimal(2);
    }
    return "≥ " + row.fpp.floor_decimal(4);
}

std::string emit_table(const std::vector<TableRow>& rows, Format format, DigitMode digits) {
    std::ostringstream os;
    switch (format) {
        case Format::csv:
            os << "r,p2_value,p2_kind,fpp_bound,fpp_kind,flags\n";
            for (const auto& row : rows)
                os << row.r << "," << csv_escape(p2_cell(row, digits)) << "," << row.p2_kind << ","
                   << csv_escape(fpp_cell(row, digits)) << "," << row.fpp_kind << ","
                   << csv_escape(join(row.flags, ";")) << "\n";
            return os.str();
        case Format::json: {
            ojson out = ojson::array();
            for (const auto& row : rows) {
                ojson flags = ojson::array();
                for (const auto& f : row.flags) flags.push_back(f);
                out.push_back({{"r", row.r},
                               {"p2_value", p2_cell(row, digits)},
                               {"p2_kind", row.p2_kind},
                               {"p2_exact", row.p2.symbolic()},
                               {"fpp_bound", fpp_cell(row, digits)},
                               {"fpp_kind", row.fpp_kind},
                               {"fpp_exact", row.fpp.symbolic()},
                               {"flags", flags}});
            }
            return out.dump(2) + "\n";
        }
        case Format::text:
        case Format::md:
            os << "| r | ε(P², O(1); r) | ε(FPP, L₁; r) | flags |\n|---|---|---|---|\n";
            for (const auto& row : rows)
                os << "| " << row.r << " | " << p2_cell(row, digits) << " | " << fpp_cell(row, digits) << " | "
                   << join(row.flags, "; ") << " |\n";
            return os.str();
    }
    return os.str();
}

std::string emit_range_report(const RangeReport& report, const RunConfig& config, Format format,
                              const std::map<std::string, double>& timings_ms) {
    std::ostringstream os;
    if (format == Format::csv || format == Format::md) {
        if (format == Format::csv)
            os << "r,delta,k_max,verdict,survivors,exact\n";
        else
            os << "| r | delta | k_max | verdict | survivors | exact |\n|---|---|---|---|---|---|\n";
        const std::string sep = format == Format::csv ? "," : " | ";
        const std::string lead = format == Format::csv ? "" : "| ";
        const std::string tail = format == Format::csv ? "" : " |";
        for (const auto& e : report.entries) {
            os << lead << e.r << sep;
            if (e.exact)
                os << sep << sep << "EXACT" << sep << sep << rational_string_short(*e.exact);
            else
                os << rational_string(e.certificate->delta) << sep << e.certificate->k_max << sep
                   << (e.certificate->pass() ? "PASS" : "FAIL") << sep << e.certificate->survivors.size() << sep;
            os << tail << "\n";
        }
        return os.str();
    }

    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["config"] = config_json(config);
    j["verdict"] = report.pass() ? "PASS" : "FAIL";
    ojson entries = ojson::array();
    for (const auto& e : report.entries) {
        ojson x;
        x["r"] = e.r;
        if (e.exact) {
            x["square"] = true;
            x["exact"] = rational_string(*e.exact);
        } else {
            const auto& c = *e.certificate;
            x["square"] = false;
            x["delta"] = rational_string(c.delta);
            x["k_max"] = c.k_max;
            x["verdict"] = c.pass() ? "PASS" : "FAIL";
            std::int64_t rejected = 0;
            for (const auto& kv : c.threshold_rejection_counts) rejected += kv.second;
            x["threshold_rejections"] = rejected;
            x["excluded"] = c.excluded.size();
            ojson sv = ojson::array();
            for (const auto& s : c.survivors) {
                ojson cj = candidate_json(s);
                cj["ratio"] = rational_ratio(s.candidate);
                sv.push_back(std::move(cj));
            }
            x["survivors"] = sv;
        }
        entries.push_back(std::move(x));
    }
    j["entries"] = entries;
    ojson timings = ojson::object();
    for (const auto& [name, ms] : timings_ms) timings[name] = ms;
    j["timings_ms"] = timings;
    return j.dump(2) + "\n";
}

std::string emit_optimize(const OptimizeResult& result, const RunConfig& config, Format format) {
    const auto& below = result.failing_below;
    if (format == Format::text) {
        std::ostringstream os;
        os << "delta " << rational_string(result.delta) << " ("
           << rational_decimal(result.delta, 3, Rounding::floor) << ") "
           << (result.passing.pass() ? "PASS" : "FAIL") << "\n";
        if (below)
            for (const auto& s : below->survivors)
                os << "binding at " << rational_string(below->delta) << ": " << witness_line(s) << "\n";
        return os.str();
    }
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["config"] = config_json(config);
    j["r"] = result.passing.r;
    j["delta"] = rational_string(result.delta);
    j["verdict_at_delta"] = result.passing.pass() ? "PASS" : "FAIL";
    j["beyond_paper"] = result.passing.filters.beyond_paper();
    if (below) {
        j["delta_below"] = rational_string(below->delta);
        j["verdict_below"] = below->pass() ? "PASS" : "FAIL";
        ojson sv = ojson::array();
        for (const auto& s : below->survivors) {
            ojson cj = candidate_json(s);
            cj["ratio"] = rational_ratio(s.candidate);
            sv.push_back(std::move(cj));
        }
        j["binding"] = sv;
    } else {
        j["delta_below"] = nullptr;
        j["verdict_below"] = nullptr;
        j["binding"] = ojson::array();
    }
    return j.dump(2) + "\n";
}

}  // namespace seshcert

#pragma once

// Run configuration, canonical certificate serialization and table emission.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seshcert/bounds.hpp"
#include "seshcert/exclusion.hpp"

namespace seshcert {

inline constexpr const char* kSchemaVersion = "seshcert-certificate/1";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Command { verify, verify_range, optimize, cutoff, table, compare, tail };
enum class Format { text, json, csv, md };
enum class DigitMode { four, paper };

std::string_view to_string(Command c);
Command parse_command(std::string_view name);
std::string_view to_string(Format f);
Format parse_format(std::string_view name);
std::string_view to_string(DigitMode d);
DigitMode parse_digit_mode(std::string_view name);

struct RunConfig {
    Command command = Command::verify;
    std::optional<std::int64_t> r;
    std::optional<std::int64_t> r_from;
    std::optional<std::int64_t> r_to;
    std::optional<Rational> delta;
    /// "theorem" or "remark_tail"; verify-range only, ignored when delta is set.
    std::optional<std::string> policy;
    std::optional<std::int64_t> k_max_override;
    FilterSet filters = FilterSet::paper();
    Rational grid_step = Rational(1, 1000);
    std::optional<Format> format;
    DigitMode digits = DigitMode::four;
    bool full = false;
    std::optional<std::string> output_path;
    /// Not part of the echoed config: results do not depend on it.
    int threads = 1;

    /// Compares the echoed fields only.
    friend bool operator==(const RunConfig& a, const RunConfig& b);
};

struct CertificateDocument {
    std::string schema_version = kSchemaVersion;
    std::string tool_version = kToolVersion;
    RunConfig config;
    ExclusionCertificate certificate;
    std::map<std::string, double> timings_ms;

    friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

/// Canonical serialization. JSON key order:
///   schema_version, tool_version, config, r, delta, k_cutoff, verdict, k_max, filters,
///   beyond_paper, all_ones_record, roth_c_record, excluded, survivors,
///   threshold_rejection_counts, timings_ms
/// Rationals are "p/q" strings; candidate lists are sorted by (k, m, M).
std::string emit_certificate(const CertificateDocument& doc, Format format);
CertificateDocument parse_certificate(const std::string& json_text);

/// Serialized document with the timings removed, for byte-level comparisons.
std::string canonical_without_timings(const std::string& json_text);

std::string emit_table(const std::vector<TableRow>& rows, Format format, DigitMode digits);
/// Cell text for the P^2 and fake projective plane columns.
std::string p2_cell(const TableRow& row, DigitMode digits);
std::string fpp_cell(const TableRow& row, DigitMode digits);

std::string emit_range_report(const RangeReport& report, const RunConfig& config, Format format,
                              const std::map<std::string, double>& timings_ms);
std::string emit_optimize(const OptimizeResult& result, const RunConfig& config, Format format);

/// "(k, m, M, ratio, case, f)" for a survivor.
std::string witness_line(const Evaluation& e);

}  // namespace seshcert

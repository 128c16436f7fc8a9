#pragma once

// Exhaustive exclusion of candidate submaximal curves below the threshold
// 1 / (sqrt(r) + delta), producing machine-checkable certificates.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seshcert/quad.hpp"
#include "seshcert/surface.hpp"

namespace seshcert {

/// Which of the five Xu-type inequality families applies to a pattern.
///   F1: M = m >= 2      F2: 1 < M < m      F3: 1 < m < M
///   F4: M = 1 < m       F5: m = 1 < M
enum class FCase { F1, F2, F3, F4, F5 };

std::string_view to_string(FCase c);
FCase parse_fcase(std::string_view name);

/// Case of (m, M); nullopt for the all-ones pattern or a zero multiplicity.
std::optional<FCase> classify(std::int64_t m, std::int64_t big_m);

struct Candidate {
    std::int64_t k;
    MultiplicityPattern pattern;
    FCase case_id;

    /// Throws std::invalid_argument for the all-ones pattern or zero multiplicities.
    static Candidate make(std::int64_t r, std::int64_t k, std::int64_t m, std::int64_t big_m);

    std::int64_t r() const { return pattern.r(); }
    std::int64_t m() const { return pattern.m(); }
    std::int64_t big_m() const { return pattern.big_m(); }
    CurveClass curve() const { return CurveClass(k); }

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// The family formula for `c` evaluated at any (m, M), without checking the case split.
std::int64_t family_formula(FCase c, std::int64_t k, std::int64_t r, std::int64_t m, std::int64_t big_m);

/// Value of the inequality family `c`; a candidate is excluded by Xu iff this is > 0.
/// Throws if `c` does not match the pattern (m, M).
std::int64_t f_value(FCase c, std::int64_t k, std::int64_t r, std::int64_t m, std::int64_t big_m);
std::int64_t f_value(const Candidate& c);

/// Smallest k with k / (k sqrt(r) + 1/2) >= 1 / (sqrt(r) + delta), i.e. ceil(1 / (2 delta)).
std::int64_t k_cutoff(const Rational& delta);

/// Incompatibility of submaximality (k < sqrt(r)) with the dimension count
/// k >= (3 + sqrt(1 + 8r)) / 2 for curves through r points with multiplicity one.
struct AllOnesRecord {
    std::int64_t r;
    std::int64_t max_submaximal_k;  ///< largest k with k < sqrt(r)
    std::int64_t min_dimension_k;   ///< ceil((3 + sqrt(1 + 8r)) / 2)
    bool verified;

    friend bool operator==(const AllOnesRecord&, const AllOnesRecord&) = default;
};
AllOnesRecord all_ones_excluded(std::int64_t r);

/// Sum and equal-multiplicity constraints for submaximal curves:
/// sum = ceil(sqrt(r k^2)), plus r m^2 - k^2 <= m when M = m,
/// or sum - k sqrt(r) < 1/r when M != m.
bool roth_sum_filter(const Candidate& c);

/// -D^2 <= (m - M)^2 < -r/(r-1) D^2 with D^2 = k^2 - (r-1) m^2 - M^2. Requires M != m.
bool roth_b_filter(const Candidate& c);

/// Zero-multiplicity submaximal curves need C^2 = -1, impossible for C^2 = k^2.
struct RothCRecord {
    std::int64_t k;
    std::int64_t self_intersection;
    bool impossible;

    friend bool operator==(const RothCRecord&, const RothCRecord&) = default;
};
RothCRecord roth_c_check(const CurveClass& c);

enum class Filter { threshold, roth_def, roth_b, xu };

std::string_view to_string(Filter f);
Filter parse_filter(std::string_view name);

/// Enabled filters in application order.
class FilterSet {
public:
    FilterSet() = default;
    explicit FilterSet(std::vector<Filter> order);

    /// threshold + roth_def + xu, the set the original proof uses.
    static FilterSet paper();
    static FilterSet parse(std::string_view comma_list);

    bool has(Filter f) const;
    bool beyond_paper() const { return has(Filter::roth_b); }
    const std::vector<Filter>& order() const { return order_; }
    /// Names in canonical (enum) order, independent of application order.
    std::vector<std::string> names() const;

    friend bool operator==(const FilterSet&, const FilterSet&) = default;

private:
    std::vector<Filter> order_;
};

enum class Status { above_threshold, roth_sum_bound, roth_b, xu_positive, survivor };

std::string_view to_string(Status s);
Status parse_status(std::string_view name);

struct Evaluation {
    Candidate candidate;
    Status status;
    std::int64_t f;

    friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

Evaluation evaluate(const Candidate& c, const Rational& delta, const FilterSet& filters);

/// Number of (m, M) patterns enumerated for degree k: all m, M >= 1 with
/// (r - 1) m + M <= ceil(sqrt(r k^2)) + 1, except the all-ones pattern.
std::int64_t domain_size(std::int64_t r, std::int64_t k);

/// Every pattern of the domain for k = 1..k_max, ordered by (k, m, M).
/// Cells for different k run on up to `threads` threads; output order does not depend on it.
std::vector<Evaluation> enumerate_candidates(std::int64_t r, const Rational& delta, std::int64_t k_max,
                                             const FilterSet& filters, int threads = 1);

struct ExclusionCertificate {
    std::int64_t r = 0;
    Rational delta;
    std::int64_t k_cutoff = 0;
    std::int64_t k_max = 0;
    FilterSet filters;
    AllOnesRecord all_ones{};
    std::vector<RothCRecord> roth_c;
    /// Non-threshold exclusions; threshold rejections too when built with `full`.
    std::vector<Evaluation> excluded;
    std::vector<Evaluation> survivors;
    /// (k, count) for every k in [1, k_max].
    std::vector<std::pair<std::int64_t, std::int64_t>> threshold_rejection_counts;
    bool full = false;

    bool pass() const { return survivors.empty(); }

    friend bool operator==(const ExclusionCertificate&, const ExclusionCertificate&) = default;
};

struct VerifyOptions {
    std::optional<std::int64_t> k_max;  ///< defaults to k_cutoff(delta) - 1
    int threads = 1;
    bool full = false;
};

ExclusionCertificate verify_delta(std::int64_t r, const Rational& delta, const FilterSet& filters,
                                  const VerifyOptions& options = {});

struct OptimizeResult {
    Rational delta;
    ExclusionCertificate passing;
    /// Certificate at delta - grid_step, when that is still positive. Its survivors bind.
    std::optional<ExclusionCertificate> failing_below;
};

/// Smallest delta on the grid {step, 2 step, ...} for which verify_delta passes.
OptimizeResult optimize_delta(std::int64_t r, const Rational& grid_step, const FilterSet& filters,
                              int threads = 1);

/// Closure for large r: for r > k_max^2 - 3 every pattern with a multiplicity >= 2
/// has f > 0 for all k <= k_max (the weakest family is F5 at M = 2).
struct TailRecord {
    std::int64_t k_max;
    std::int64_t r_threshold;
    std::string statement;
};
TailRecord tail_threshold(std::int64_t k_max);

/// Patterns with a multiplicity >= 2 and f <= 0 over the domain for k <= k_max.
/// No threshold or Roth filtering; works for square r.
std::vector<Candidate> xu_survivors(std::int64_t r, std::int64_t k_max);

/// Lower-bound deltas by number of points: 2 -> 31/1000, 3 -> 18/1000, 5 -> 14/1000,
/// 6 -> 22/1000, 7 -> 11/1000, 8 -> 12/1000, r >= 10 -> 13/1000. Throws for squares and r < 2.
Rational theorem_delta(std::int64_t r);

class DeltaPolicy {
public:
    enum class Kind { theorem, remark_tail, fixed };

    static DeltaPolicy theorem() { return DeltaPolicy(Kind::theorem, 0); }
    /// 1/100 for r >= 23, theorem table below that.
    static DeltaPolicy remark_tail() { return DeltaPolicy(Kind::remark_tail, 0); }
    static DeltaPolicy fixed(Rational delta) { return DeltaPolicy(Kind::fixed, std::move(delta)); }

    Rational delta_for(std::int64_t r) const;
    Kind kind() const { return kind_; }
    std::string name() const;

private:
    DeltaPolicy(Kind kind, Rational delta) : kind_(kind), delta_(std::move(delta)) {}
    Kind kind_;
    Rational delta_;
};

struct RangeEntry {
    std::int64_t r;
    /// Set for square r = s^2: the exact value 1/s.
    std::optional<Rational> exact;
    std::optional<ExclusionCertificate> certificate;

    bool pass() const { return exact.has_value() || certificate->pass(); }
};

struct RangeReport {
    std::int64_t r_from;
    std::int64_t r_to;
    std::vector<RangeEntry> entries;

    bool pass() const;
};

RangeReport verify_range(std::int64_t r_from, std::int64_t r_to, const DeltaPolicy& policy,
                         const FilterSet& filters, const VerifyOptions& options = {});

}  // namespace seshcert

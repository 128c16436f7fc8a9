#include "seshcert/exclusion.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace seshcert {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

bool is_square(std::int64_t r) { return is_perfect_square(Integer(r)); }

void require_non_square(std::int64_t r, const char* who) {
    if (r < 2) throw std::invalid_argument(std::string(who) + ": r must be >= 2, got " + str(r));
    if (is_square(r)) throw std::invalid_argument(std::string(who) + ": r = " + str(r) + " is a perfect square");
}

void require_positive(const Rational& delta, const char* who) {
    if (delta <= 0) throw std::invalid_argument(std::string(who) + ": delta must be > 0");
}

bool passes(Filter f, const Candidate& c, const Rational& delta, std::int64_t fv) {
    switch (f) {
        case Filter::threshold: return is_below_threshold(c.curve(), c.pattern, delta);
        case Filter::roth_def: return roth_sum_filter(c);
        case Filter::roth_b: return c.m() == c.big_m() || roth_b_filter(c);
        case Filter::xu: return fv <= 0;
    }
    return true;
}

Status rejection_status(Filter f) {
    switch (f) {
        case Filter::threshold: return Status::above_threshold;
        case Filter::roth_def: return Status::roth_sum_bound;
        case Filter::roth_b: return Status::roth_b;
        case Filter::xu: return Status::xu_positive;
    }
    return Status::survivor;
}

template <class Cell>
void for_each_cell(std::int64_t count, int threads, Cell&& cell) {
    const int workers = static_cast<int>(std::clamp<std::int64_t>(threads, 1, std::max<std::int64_t>(count, 1)));
    if (workers <= 1) {
        for (std::int64_t i = 0; i < count; ++i) cell(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::int64_t i = next++; i < count; i = next++) cell(i);
        });
}

// Largest multiplicity sum enumerated for degree k.
std::int64_t sum_bound(std::int64_t r, std::int64_t k) { return ceil_sqrt(r * k * k) + 1; }

}  // namespace

std::string_view to_string(FCase c) {
    switch (c) {
        case FCase::F1: return "F1";
        case FCase::F2: return "F2";
        case FCase::F3: return "F3";
        case FCase::F4: return "F4";
        case FCase::F5: return "F5";
    }
    return "?";
}

FCase parse_fcase(std::string_view name) {
    for (FCase c : {FCase::F1, FCase::F2, FCase::F3, FCase::F4, FCase::F5})
        if (to_string(c) == name) return c;
    throw std::invalid_argument("unknown case '" + std::string(name) + "'");
}

std::optional<FCase> classify(std::int64_t m, std::int64_t big_m) {
    if (m < 1 || big_m < 1 || (m == 1 && big_m == 1)) return std::nullopt;
    if (m == big_m) return FCase::F1;
    if (big_m == 1) return FCase::F4;
    if (m == 1) return FCase::F5;
    return big_m < m ? FCase::F2 : FCase::F3;
}

Candidate Candidate::make(std::int64_t r, std::int64_t k, std::int64_t m, std::int64_t big_m) {
    auto c = classify(m, big_m);
    if (!c)
        throw std::invalid_argument("Candidate: pattern (m=" + str(m) + ", M=" + str(big_m) +
                                    ") is all-ones or has a zero multiplicity");
    return Candidate{k, MultiplicityPattern(r, m, big_m), *c};
}

std::int64_t family_formula(FCase c, std::int64_t k, std::int64_t r, std::int64_t m, std::int64_t big_m) {
    const std::int64_t k2 = k * k;
    switch (c) {
        case FCase::F1: return r * m * m - m + 2 - k2;
        case FCase::F2: return (r - 1) * m * m + big_m * big_m - big_m + 2 - k2;
        case FCase::F3: return (r - 1) * m * m + big_m * big_m - m + 2 - k2;
        case FCase::F4: return (r - 1) * m * m + 1 - m + 2 - k2;
        // The single multiplicity above one is M.
        case FCase::F5: return (r - 1) + big_m * big_m - big_m + 2 - k2;
    }
    throw std::logic_error("family_formula: unreachable");
}

std::int64_t f_value(FCase c, std::int64_t k, std::int64_t r, std::int64_t m, std::int64_t big_m) {
    if (classify(m, big_m) != c)
        throw std::invalid_argument("f_value: case " + std::string(to_string(c)) + " does not match (m=" + str(m) +
                                    ", M=" + str(big_m) + ")");
    return family_formula(c, k, r, m, big_m);
}

std::int64_t f_value(const Candidate& c) { return f_value(c.case_id, c.k, c.r(), c.m(), c.big_m()); }

std::int64_t k_cutoff(const Rational& delta) {
    require_positive(delta, "k_cutoff");
    const Integer closed = -floor_rational(-Rational(1) / (2 * delta));
    // k / (k sqrt(r) + 1/2) >= 1 / (sqrt(r) + delta)  <=>  k (sqrt(r) + delta) - (k sqrt(r) + 1/2) >= 0.
    // The surd parts cancel, so any radicand decides it; check in Q(sqrt(2)).
    auto holds = [&](const Integer& k) {
        const Rational kr(k);
        const QuadReal lhs(kr * delta, kr, Integer(2));
        const QuadReal rhs(Rational(1, 2), kr, Integer(2));
        return q_sign(lhs - rhs) >= 0;
    };
    if (!holds(closed) || (closed > 1 && holds(closed - 1)))
        throw std::logic_error("k_cutoff: closed form disagrees with the inequality");
    return static_cast<std::int64_t>(closed);
}

AllOnesRecord all_ones_excluded(std::int64_t r) {
    if (r < 2) throw std::invalid_argument("all_ones_excluded: r must be >= 2");
    const Integer rr(r);
    // Submaximal: k / r < 1 / sqrt(r)  <=>  k < sqrt(r).
    const std::int64_t sub = ceil_sqrt(r) - 1;
    const bool sub_ok = surd_sign(Rational(-sub), 1, rr) > 0 && surd_sign(Rational(sub + 1), -1, rr) >= 0;

    // Dimension count: k >= (3 + sqrt(1 + 8r)) / 2.
    const Integer n = 1 + 8 * rr;
    const Integer s = isqrt(n);
    const std::int64_t dim = static_cast<std::int64_t>(s * s == n ? (3 + s + 1) / 2 : (3 + s) / 2 + 1);
    // 2 dim - 3 >= sqrt(n) and 2 (dim - 1) - 3 < sqrt(n).
    const bool dim_ok = surd_sign(Rational(3 - 2 * dim), 1, n) <= 0 && surd_sign(Rational(5 - 2 * dim), 1, n) > 0;

    AllOnesRecord rec{r, sub, dim, sub_ok && dim_ok && sub < dim};
    if (!rec.verified) throw std::logic_error("all_ones_excluded: verification failed for r = " + str(r));
    return rec;
}

bool roth_sum_filter(const Candidate& c) {
    const std::int64_t r = c.r(), k = c.k, m = c.m(), big_m = c.big_m();
    const std::int64_t sum = c.pattern.total();
    if (sum != ceil_sqrt(r * k * k)) return false;
    if (m == big_m) return r * m * m - k * k <= m;
    // sum - k sqrt(r) < 1/r
    return surd_sign(Rational(sum) - Rational(1, r), Rational(-k), Integer(r)) < 0;
}

bool roth_b_filter(const Candidate& c) {
    const std::int64_t r = c.r(), k = c.k, m = c.m(), big_m = c.big_m();
    if (m == big_m) throw std::invalid_argument("roth_b_filter: requires distinct multiplicities");
    const std::int64_t d2 = k * k - (r - 1) * m * m - big_m * big_m;
    const std::int64_t diff2 = (m - big_m) * (m - big_m);
    return -d2 <= diff2 && (r - 1) * diff2 < -r * d2;
}

RothCRecord roth_c_check(const CurveClass& c) {
    return RothCRecord{c.k(), c.self_intersection(), c.self_intersection() != -1};
}

std::string_view to_string(Filter f) {
    switch (f) {
        case Filter::threshold: return "threshold";
        case Filter::roth_def: return "roth_def";
        case Filter::roth_b: return "roth_b";
        case Filter::xu: return "xu";
    }
    return "?";
}

Filter parse_filter(std::string_view name) {
    for (Filter f : {Filter::threshold, Filter::roth_def, Filter::roth_b, Filter::xu})
        if (to_string(f) == name) return f;
    throw std::invalid_argument("unknown filter '" + std::string(name) + "'");
}

FilterSet::FilterSet(std::vector<Filter> order) : order_(std::move(order)) {
    for (std::size_t i = 0; i < order_.size(); ++i)
        for (std::size_t j = i + 1; j < order_.size(); ++j)
            if (order_[i] == order_[j])
                throw std::invalid_argument("duplicate filter '" + std::string(to_string(order_[i])) + "'");
}

FilterSet FilterSet::paper() { return FilterSet({Filter::threshold, Filter::roth_def, Filter::xu}); }

FilterSet FilterSet::parse(std::string_view comma_list) {
    std::vector<Filter> order;
    while (!comma_list.empty()) {
        const auto comma = comma_list.find(',');
        order.push_back(parse_filter(comma_list.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        comma_list.remove_prefix(comma + 1);
    }
    return FilterSet(std::move(order));
}

bool FilterSet::has(Filter f) const { return std::find(order_.begin(), order_.end(), f) != order_.end(); }

std::vector<std::string> FilterSet::names() const {
    std::vector<std::string> out;
    for (Filter f : {Filter::threshold, Filter::roth_def, Filter::roth_b, Filter::xu})
        if (has(f)) out.emplace_back(to_string(f));
    return out;
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::above_threshold: return "above_threshold";
        case Status::roth_sum_bound: return "roth_sum_bound";
        case Status::roth_b: return "roth_b";
        case Status::xu_positive: return "xu_positive";
        case Status::survivor: return "survivor";
    }
    return "?";
}

Status parse_status(std::string_view name) {
    for (Status s : {Status::above_threshold, Status::roth_sum_bound, Status::roth_b, Status::xu_positive,
                     Status::survivor})
        if (to_string(s) == name) return s;
    throw std::invalid_argument("unknown status '" + std::string(name) + "'");
}

Evaluation evaluate(const Candidate& c, const Rational& delta, const FilterSet& filters) {
    const std::int64_t fv = f_value(c);
    for (Filter f : filters.order())
        if (!passes(f, c, delta, fv)) return Evaluation{c, rejection_status(f), fv};
    return Evaluation{c, Status::survivor, fv};
}

std::int64_t domain_size(std::int64_t r, std::int64_t k) {
    const std::int64_t bound = sum_bound(r, k);
    std::int64_t count = 0;
    for (std::int64_t m = 1; (r - 1) * m + 1 <= bound; ++m) count += bound - (r - 1) * m;
    return r <= bound ? count - 1 : count;
}

std::vector<Evaluation> enumerate_candidates(std::int64_t r, const Rational& delta, std::int64_t k_max,
                                             const FilterSet& filters, int threads) {
    require_non_square(r, "enumerate_candidates");
    require_positive(delta, "enumerate_candidates");
    if (k_max < 0) throw std::invalid_argument("enumerate_candidates: k_max must be >= 0");

    std::vector<std::vector<Evaluation>> cells(static_cast<std::size_t>(k_max));
    for_each_cell(k_max, threads, [&](std::int64_t index) {
        const std::int64_t k = index + 1;
        const std::int64_t bound = sum_bound(r, k);
        auto& out = cells[static_cast<std::size_t>(index)];
        for (std::int64_t m = 1; (r - 1) * m + 1 <= bound; ++m)
            for (std::int64_t big_m = 1; (r - 1) * m + big_m <= bound; ++big_m) {
                if (m == 1 && big_m == 1) continue;
                out.push_back(evaluate(Candidate::make(r, k, m, big_m), delta, filters));
            }
    });

    std::vector<Evaluation> all;
    for (auto& cell : cells) std::move(cell.begin(), cell.end(), std::back_inserter(all));
    return all;
}

ExclusionCertificate verify_delta(std::int64_t r, const Rational& delta, const FilterSet& filters,
                                  const VerifyOptions& options) {
    require_non_square(r, "verify_delta");
    require_positive(delta, "verify_delta");

    ExclusionCertificate cert;
    cert.r = r;
    cert.delta = delta;
    cert.k_cutoff = k_cutoff(delta);
    cert.k_max = options.k_max.value_or(cert.k_cutoff - 1);
    if (cert.k_max < 0) throw std::invalid_argument("verify_delta: k_max must be >= 0");
    cert.filters = filters;
    cert.full = options.full;
    cert.all_ones = all_ones_excluded(r);
    for (std::int64_t k = 1; k <= cert.k_max; ++k) cert.roth_c.push_back(roth_c_check(CurveClass(k)));

    std::vector<std::int64_t> counts(static_cast<std::size_t>(cert.k_max), 0);
    for (auto& e : enumerate_candidates(r, delta, cert.k_max, filters, options.threads)) {
        switch (e.status) {
            case Status::survivor: cert.survivors.push_back(std::move(e)); break;
            case Status::above_threshold:
                ++counts[static_cast<std::size_t>(e.candidate.k - 1)];
                if (options.full) cert.excluded.push_back(std::move(e));
                break;
            default: cert.excluded.push_back(std::move(e)); break;
        }
    }
    for (std::int64_t k = 1; k <= cert.k_max; ++k)
        cert.threshold_rejection_counts.emplace_back(k, counts[static_cast<std::size_t>(k - 1)]);
    return cert;
}

OptimizeResult optimize_delta(std::int64_t r, const Rational& grid_step, const FilterSet& filters, int threads) {
    require_non_square(r, "optimize_delta");
    require_positive(grid_step, "optimize_delta");
    VerifyOptions opts;
    opts.threads = threads;
    auto run = [&](std::int64_t j) { return verify_delta(r, grid_step * j, filters, opts); };

    // At delta >= 1/2 the cutoff is 1 and nothing is enumerated, so the top of the grid passes.
    std::int64_t hi = static_cast<std::int64_t>(-floor_rational(-Rational(1, 2) / grid_step));
    std::int64_t lo = 0;  // delta = 0 is treated as failing
    std::optional<ExclusionCertificate> best;
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        auto cert = run(mid);
        if (cert.pass()) {
            hi = mid;
            best = std::move(cert);
        } else {
            lo = mid;
        }
    }
    OptimizeResult result{grid_step * hi, best ? std::move(*best) : run(hi), std::nullopt};
    if (hi > 1) result.failing_below = run(hi - 1);
    return result;
}

TailRecord tail_threshold(std::int64_t k_max) {
    if (k_max < 2) throw std::invalid_argument("tail_threshold: k_max must be >= 2");
    const std::int64_t threshold = k_max * k_max - 3;
    return TailRecord{
        k_max, threshold,
        "for every r > " + str(threshold) + " and every k <= " + str(k_max) +
            ", each pattern with a multiplicity >= 2 has f > 0 (weakest: F5 at M = 2 needs r <= k^2 - 3); "
            "with the all-ones exclusion, 1/(sqrt(r)+delta) holds for every delta with k_cutoff(delta) - 1 <= " +
            str(k_max) + " [beyond-paper derivation]"};
}

std::vector<Candidate> xu_survivors(std::int64_t r, std::int64_t k_max) {
    if (r < 2) throw std::invalid_argument("xu_survivors: r must be >= 2");
    std::vector<Candidate> out;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const std::int64_t bound = sum_bound(r, k);
        for (std::int64_t m = 1; (r - 1) * m + 1 <= bound; ++m)
            for (std::int64_t big_m = 1; (r - 1) * m + big_m <= bound; ++big_m) {
                if (m == 1 && big_m == 1) continue;
                auto c = Candidate::make(r, k, m, big_m);
                if (f_value(c) <= 0) out.push_back(c);
            }
    }
    return out;
}

Rational theorem_delta(std::int64_t r) {
    require_non_square(r, "theorem_delta");
    switch (r) {
        case 2: return Rational(31, 1000);
        case 3: return Rational(18, 1000);
        case 5: return Rational(14, 1000);
        case 6: return Rational(22, 1000);
        case 7: return Rational(11, 1000);
        case 8: return Rational(12, 1000);
        default: return Rational(13, 1000);
    }
}

Rational DeltaPolicy::delta_for(std::int64_t r) const {
    switch (kind_) {
        case Kind::fixed: return delta_;
        case Kind::remark_tail: return r >= 23 ? Rational(1, 100) : theorem_delta(r);
        case Kind::theorem: return theorem_delta(r);
    }
    throw std::logic_error("DeltaPolicy: unreachable");
}

std::string DeltaPolicy::name() const {
    switch (kind_) {
        case Kind::fixed: return "fixed:" + rational_string(delta_);
        case Kind::remark_tail: return "remark_tail";
        case Kind::theorem: return "theorem";
    }
    return "?";
}

bool RangeReport::pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const RangeEntry& e) { return e.pass(); });
}

RangeReport verify_range(std::int64_t r_from, std::int64_t r_to, const DeltaPolicy& policy,
                         const FilterSet& filters, const VerifyOptions& options) {
    if (r_from < 2 || r_from > r_to) throw std::invalid_argument("verify_range: need 2 <= r_from <= r_to");
    RangeReport report{r_from, r_to, {}};
    for (std::int64_t r = r_from; r <= r_to; ++r) {
        if (is_square(r)) {
            report.entries.push_back(RangeEntry{r, Rational(1, ceil_sqrt(r)), std::nullopt});
            continue;
        }
        report.entries.push_back(RangeEntry{r, std::nullopt, verify_delta(r, policy.delta_for(r), filters, options)});
    }
    return report;
}

}  // namespace seshcert

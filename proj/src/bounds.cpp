#include "seshcert/bounds.hpp"

#include <stdexcept>

#include "seshcert/exclusion.hpp"

namespace seshcert {

namespace {

bool is_square(std::int64_t r) { return is_perfect_square(Integer(r)); }

// Printed values that do not follow from 1/(sqrt(r) + theorem_delta(r)).
std::optional<std::string> reference_mismatch(std::int64_t r) {
    switch (r) {
        case 3: return "reference_mismatch:0.5701";
        case 8: return "reference_mismatch:0.3391";
        case 12: return "reference_mismatch:0.2876";  // printed value rounds the bound up
        case 14: return "reference_mismatch_p2:0.2661";  // SzSz column, rounded up
        default: return std::nullopt;
    }
}

}  // namespace

BoundValue BoundValue::exact(Rational value) {
    if (value <= 0) throw std::invalid_argument("BoundValue: bound must be positive");
    BoundValue b;
    b.kind_ = Kind::exact_rational;
    b.value_ = std::move(value);
    return b;
}

BoundValue BoundValue::reciprocal_sqrt_shift(std::int64_t r, Rational delta) {
    if (r < 2 || is_square(r)) throw std::invalid_argument("BoundValue: r must be a non-square >= 2");
    if (delta < 0) throw std::invalid_argument("BoundValue: delta must be >= 0");
    BoundValue b;
    b.kind_ = Kind::reciprocal_sqrt_shift;
    b.r_ = r;
    b.delta_ = std::move(delta);
    return b;
}

BoundValue BoundValue::sqrt_ratio(Integer radicand, Integer denominator) {
    if (radicand < 1 || denominator < 1) throw std::invalid_argument("BoundValue: sqrt_ratio needs positive data");
    BoundValue b;
    b.kind_ = Kind::sqrt_ratio;
    b.radicand_ = std::move(radicand);
    b.denominator_ = std::move(denominator);
    return b;
}

std::optional<Rational> BoundValue::as_rational() const {
    switch (kind_) {
        case Kind::exact_rational: return value_;
        case Kind::reciprocal_sqrt_shift: return std::nullopt;
        case Kind::sqrt_ratio:
            if (is_perfect_square(radicand_)) return Rational(isqrt(radicand_), denominator_);
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<QuadReal> BoundValue::as_quad() const {
    if (as_rational()) return std::nullopt;
    if (kind_ == Kind::reciprocal_sqrt_shift) return threshold_value(r_, delta_);
    return QuadReal(0, Rational(1) / Rational(denominator_), radicand_);
}

std::string BoundValue::floor_decimal(int places) const {
    if (auto q = as_rational()) return rational_decimal(*q, places, Rounding::floor);
    return q_decimal(*as_quad(), places, Rounding::floor);
}

int BoundValue::compare_to(const Rational& q) const {
    if (auto v = as_rational()) return (*v - q).sign();
    const QuadReal x = *as_quad();
    return q_sign(x - QuadReal(q, x.radicand()));
}

std::string BoundValue::symbolic() const {
    switch (kind_) {
        case Kind::exact_rational: return rational_string(value_);
        case Kind::reciprocal_sqrt_shift:
            return "1/(sqrt(" + std::to_string(r_) + ")+" + rational_string(delta_) + ")";
        case Kind::sqrt_ratio: return "sqrt(" + radicand_.str() + ")/" + denominator_.str();
    }
    return "?";
}

std::string_view BoundValue::kind_name() const {
    switch (kind_) {
        case Kind::exact_rational: return "exact_rational";
        case Kind::reciprocal_sqrt_shift: return "reciprocal_sqrt_shift";
        case Kind::sqrt_ratio: return "sqrt_ratio";
    }
    return "?";
}

std::int64_t szemberg_floor(std::int64_t l_sq, std::int64_t r) {
    if (l_sq < 1 || r < 1) throw std::invalid_argument("szemberg_floor: L^2 and r must be >= 1");
    // Largest s with s^2 <= L^2 / r, i.e. s^2 r <= L^2.
    std::int64_t s = static_cast<std::int64_t>(isqrt(Integer(l_sq / r)));
    while ((s + 1) * (s + 1) * r <= l_sq) ++s;
    while (s > 0 && s * s * r > l_sq) --s;
    return s;
}

BoundValue square_case(std::int64_t r, std::int64_t l_sq) {
    if (r < 1 || !is_square(r)) throw std::invalid_argument("square_case: r = " + std::to_string(r) + " is not a perfect square");
    if (l_sq < 1) throw std::invalid_argument("square_case: L^2 must be >= 1");
    const Integer s(ceil_sqrt(r));
    if (is_perfect_square(Integer(l_sq))) return BoundValue::exact(Rational(isqrt(Integer(l_sq)), s));
    return BoundValue::sqrt_ratio(Integer(l_sq), s);
}

BoundValue szsz_p2_bound(std::int64_t r) {
    if (r < 10) throw std::invalid_argument("szsz_p2_bound: valid only for r >= 10, got " + std::to_string(r));
    return BoundValue::sqrt_ratio(Integer(49 * r + 8), Integer(7 * r + 1));
}

RoeBound roe_product_bound(const BoundValue& p2_value) {
    return RoeBound{p2_value, "eps(X,L1;p) * eps(P2,O(1);r) with eps(X,L1;p) = 1 (single point constant)"};
}

std::optional<Rational> p2_reference(std::int64_t r) {
    switch (r) {
        case 1: return Rational(1);
        case 2:
        case 3:
        case 4: return Rational(1, 2);
        case 5:
        case 6: return Rational(2, 5);
        case 7: return Rational(3, 8);
        case 8: return Rational(6, 17);
        case 9: return Rational(1, 3);
        case 16: return Rational(1, 4);
        default: return std::nullopt;
    }
}

std::strong_ordering compare_thm_vs_szsz(std::int64_t r, const Rational& delta) {
    if (r < 10) throw std::invalid_argument("compare_thm_vs_szsz: r must be >= 10");
    if (is_square(r)) throw std::invalid_argument("compare_thm_vs_szsz: r = " + std::to_string(r) + " is a perfect square");
    if (delta < 0) throw std::invalid_argument("compare_thm_vs_szsz: delta must be >= 0");
    const Rational rr(r);
    const Integer n(49 * r + 8);
    const Rational d(7 * r + 1);

    //    1/(sqrt(r)+delta)  ?  sqrt(n)/d
    // <=> d/sqrt(n) - delta ?  sqrt(r)             (cross-multiply, all positive)
    // Both sides are positive when d - delta sqrt(n) > 0; then squaring and
    // multiplying by n preserves the ordering:
    // <=> d^2 - 2 delta d sqrt(n) + delta^2 n ? r n
    // <=> A - B sqrt(n) ? 0 with A = d^2 - 49 r^2 - 8 r + delta^2 n, B = 2 delta d.
    if (surd_sign(d, -delta, n) <= 0)
        throw std::logic_error("compare_thm_vs_szsz: squaring precondition fails for r = " + std::to_string(r));
    const Rational a = d * d - 49 * rr * rr - 8 * rr + delta * delta * Rational(n);
    const Rational b = 2 * delta * d;
    const int s = surd_sign(a, -b, n);
    if (s > 0) return std::strong_ordering::greater;
    if (s < 0) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::vector<TableRow> comparison_table(std::int64_t r_from, std::int64_t r_to) {
    if (r_from < 2) throw std::invalid_argument("comparison_table: r_from must be >= 2");
    std::vector<TableRow> rows;
    for (std::int64_t r = r_from; r <= r_to; ++r) {
        std::optional<Rational> known = p2_reference(r);
        BoundValue p2 = known ? BoundValue::exact(*known) : szsz_p2_bound(r);
        std::string p2_kind = known ? "exact" : "szsz_lower_bound";

        const bool square = is_square(r);
        TableRow row{r,
                     p2,
                     p2_kind,
                     square ? square_case(r) : BoundValue::reciprocal_sqrt_shift(r, theorem_delta(r)),
                     square ? "exact_square" : "theorem_lower_bound",
                     {}};
        if (auto flag = reference_mismatch(r)) row.flags.push_back(*flag);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace seshcert

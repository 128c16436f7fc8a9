#pragma once

// Reference Seshadri bounds and comparisons between the fake projective plane
// bounds and known values/bounds for the projective plane.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seshcert/quad.hpp"

namespace seshcert {

/// A positive real bound in one of three exact shapes.
class BoundValue {
public:
    enum class Kind { exact_rational, reciprocal_sqrt_shift, sqrt_ratio };

    static BoundValue exact(Rational value);
    /// 1 / (sqrt(r) + delta), r not a perfect square.
    static BoundValue reciprocal_sqrt_shift(std::int64_t r, Rational delta);
    /// sqrt(radicand) / denominator.
    static BoundValue sqrt_ratio(Integer radicand, Integer denominator);

    Kind kind() const { return kind_; }
    /// The rational value when the bound is rational (sqrt_ratio with square radicand included).
    std::optional<Rational> as_rational() const;
    /// The bound as an element of Q(sqrt(n)); nullopt when it is rational.
    std::optional<QuadReal> as_quad() const;

    /// Floor-rounded decimal; never exceeds the bound.
    std::string floor_decimal(int places) const;
    /// Sign of (bound - q).
    int compare_to(const Rational& q) const;
    /// Symbolic form, e.g. "1/(sqrt(10)+13/1000)" or "sqrt(498)/71".
    std::string symbolic() const;
    std::string_view kind_name() const;

    friend bool operator==(const BoundValue&, const BoundValue&) = default;

private:
    BoundValue() = default;
    Kind kind_ = Kind::exact_rational;
    Rational value_;       // exact_rational
    std::int64_t r_ = 0;   // reciprocal_sqrt_shift
    Rational delta_;       // reciprocal_sqrt_shift
    Integer radicand_;     // sqrt_ratio
    Integer denominator_;  // sqrt_ratio
};

/// floor(sqrt(L^2 / r)).
std::int64_t szemberg_floor(std::int64_t l_sq, std::int64_t r);

/// sqrt(L^2) / s for r = s^2; 1/s for the ample generator of a fake projective plane.
BoundValue square_case(std::int64_t r, std::int64_t l_sq = 1);

/// sqrt(49 r + 8) / (7 r + 1), a lower bound for the projective plane valid for r >= 10.
BoundValue szsz_p2_bound(std::int64_t r);

/// The product bound eps(X, L1; p) * eps(P^2, O(1); r) with eps(X, L1; p) = 1.
struct RoeBound {
    BoundValue value;
    std::string provenance;
};
RoeBound roe_product_bound(const BoundValue& p2_value);

/// Known exact multipoint Seshadri constants of O(1) on P^2 for r <= 9 and r = 16.
std::optional<Rational> p2_reference(std::int64_t r);

/// Ordering of 1/(sqrt(r) + delta) against sqrt(49 r + 8)/(7 r + 1).
std::strong_ordering compare_thm_vs_szsz(std::int64_t r, const Rational& delta);

struct TableRow {
    std::int64_t r;
    BoundValue p2;
    /// "exact" or "szsz_lower_bound"
    std::string p2_kind;
    BoundValue fpp;
    /// "exact_square" or "theorem_lower_bound"
    std::string fpp_kind;
    /// e.g. "reference_mismatch:0.3391" where a commonly printed value disagrees with the formula
    std::vector<std::string> flags;
};

/// One row per r in [r_from, r_to].
std::vector<TableRow> comparison_table(std::int64_t r_from, std::int64_t r_to);

}  // namespace seshcert

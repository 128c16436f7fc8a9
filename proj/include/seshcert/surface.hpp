#pragma once

// Numerical intersection theory of a fake projective plane and the shape of
// candidate submaximal curves.

#include <cstdint>

#include "seshcert/quad.hpp"

namespace seshcert {

/// Numerical invariants of a fake projective plane X with ample generator L1.
struct FakeProjectivePlane {
    static constexpr int c1_sq = 9;
    static constexpr int c2 = 3;
    static constexpr int l1_sq = 1;
    /// No rational or elliptic curves, so every normalization has gonality >= 2.
    static constexpr int gonality_floor = 2;

    static_assert(c1_sq == 3 * c2 && c1_sq == 9);
    static_assert(l1_sq == 1);
};

/// A curve class C in |k L1|. C.L1 = k and C^2 = k^2.
class CurveClass {
public:
    explicit CurveClass(std::int64_t k);

    std::int64_t k() const { return k_; }
    std::int64_t degree() const { return k_ * FakeProjectivePlane::l1_sq; }
    std::int64_t self_intersection() const { return k_ * k_ * FakeProjectivePlane::l1_sq; }

private:
    std::int64_t k_;
};

/// Multiplicity m at r - 1 very general points and M at the remaining one.
/// No other shapes exist for submaximal curves, so no other shapes are representable.
class MultiplicityPattern {
public:
    MultiplicityPattern(std::int64_t r, std::int64_t m, std::int64_t big_m);

    std::int64_t r() const { return r_; }
    std::int64_t m() const { return m_; }
    std::int64_t big_m() const { return big_m_; }
    /// Sum of all r multiplicities, (r - 1) m + M.
    std::int64_t total() const { return (r_ - 1) * m_ + big_m_; }
    bool has_zero() const { return m_ == 0 || big_m_ == 0; }

    friend bool operator==(const MultiplicityPattern&, const MultiplicityPattern&) = default;

private:
    std::int64_t r_;
    std::int64_t m_;
    std::int64_t big_m_;
};

/// C.L1 / sum of multiplicities, in lowest terms.
Rational ratio(const CurveClass& c, const MultiplicityPattern& p);

/// Minimal C^2 for a member of a non-trivial family with a point of
/// multiplicity >= m at a very general point: m(m - 1) + gonality floor.
std::int64_t xu_floor(std::int64_t m);

/// True iff ratio(c, p) < 1 / (sqrt(r) + delta), decided exactly in Q(sqrt(r)).
bool is_below_threshold(const CurveClass& c, const MultiplicityPattern& p, const Rational& delta);

/// The threshold 1 / (sqrt(r) + delta) as an element of Q(sqrt(r)).
QuadReal threshold_value(std::int64_t r, const Rational& delta);

}  // namespace seshcert

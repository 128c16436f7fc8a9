#include "seshcert/surface.hpp"

#include <stdexcept>
#include <string>

namespace seshcert {

CurveClass::CurveClass(std::int64_t k) : k_(k) {
    if (k < 1) throw std::invalid_argument("CurveClass: k must be >= 1, got " + std::to_string(k));
}

MultiplicityPattern::MultiplicityPattern(std::int64_t r, std::int64_t m, std::int64_t big_m)
    : r_(r), m_(m), big_m_(big_m) {
    if (r < 2) throw std::invalid_argument("MultiplicityPattern: r must be >= 2, got " + std::to_string(r));
    if (m < 0 || big_m < 0) throw std::invalid_argument("MultiplicityPattern: negative multiplicity");
    if (m == 0 && big_m == 0)
        throw std::invalid_argument("MultiplicityPattern: curve must pass through the point set");
}

Rational ratio(const CurveClass& c, const MultiplicityPattern& p) {
    if (p.total() < 1) throw std::invalid_argument("ratio: zero total multiplicity");
    return Rational(c.degree(), p.total());
}

std::int64_t xu_floor(std::int64_t m) {
    if (m < 2) throw std::invalid_argument("xu_floor: multiplicity must be >= 2, got " + std::to_string(m));
    return m * (m - 1) + FakeProjectivePlane::gonality_floor;
}

bool is_below_threshold(const CurveClass& c, const MultiplicityPattern& p, const Rational& delta) {
    if (delta < 0) throw std::invalid_argument("is_below_threshold: delta must be >= 0");
    const Integer r(p.r());
    if (is_perfect_square(r))
        throw std::invalid_argument("is_below_threshold: r = " + std::to_string(p.r()) + " is a perfect square");
    // k / S < 1 / (sqrt(r) + delta)  <=>  (S - k delta) - k sqrt(r) > 0, as all terms are positive.
    const Rational k(c.degree());
    return q_sign(QuadReal(Rational(p.total()) - k * delta, -k, r)) > 0;
}

QuadReal threshold_value(std::int64_t r, const Rational& delta) {
    const Integer n(r);
    return QuadReal(1, n) / QuadReal(delta, Rational(1), n);
}

}  // namespace seshcert

#pragma once

// Exact arithmetic in Q(sqrt(n)) for a fixed non-square radicand n.
// Every inequality decision in the engine goes through q_sign.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace seshcert {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
/// Smallest s with s*s >= n, for n >= 0.
Integer ceil_sqrt(const Integer& n);
std::int64_t ceil_sqrt(std::int64_t n);
bool is_perfect_square(const Integer& n);

/// Parses "p/q", "-p/q", "p", or a plain decimal such as "0.031" exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);
/// Canonical "p/q" form with q >= 1 (integers render as "p/1").
std::string rational_string(const Rational& x);
/// Like rational_string, but integers render without "/1".
std::string rational_string_short(const Rational& x);

Integer floor_rational(const Rational& x);

/// a + b*sqrt(n), with n >= 2 not a perfect square.
class QuadReal {
public:
    QuadReal(Rational a, Rational b, Integer n);
    QuadReal(Rational a, Integer n) : QuadReal(std::move(a), Rational(0), std::move(n)) {}

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    const Integer& radicand() const { return n_; }

    /// Conjugate a - b*sqrt(n).
    QuadReal conjugate() const { return {a_, -b_, n_, Unchecked{}}; }
    /// Field norm a^2 - b^2 n.
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(n_); }

    QuadReal operator-() const { return {-a_, -b_, n_, Unchecked{}}; }
    friend QuadReal operator+(const QuadReal& x, const QuadReal& y);
    friend QuadReal operator-(const QuadReal& x, const QuadReal& y);
    friend QuadReal operator*(const QuadReal& x, const QuadReal& y);
    friend QuadReal operator/(const QuadReal& x, const QuadReal& y);

    friend bool operator==(const QuadReal& x, const QuadReal& y) {
        return x.n_ == y.n_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    struct Unchecked {};
    QuadReal(Rational a, Rational b, Integer n, Unchecked)
        : a_(std::move(a)), b_(std::move(b)), n_(std::move(n)) {}

    Rational a_;
    Rational b_;
    Integer n_;
};

enum class ArithOp { add, sub, mul, div };

QuadReal q_arith(const QuadReal& x, const QuadReal& y, ArithOp op);

/// Exact sign of a + b*sqrt(n). Decided over the integers, never by floating point.
int q_sign(const QuadReal& x);

/// Sign of a + b*sqrt(n) where n >= 0 may be a perfect square.
int surd_sign(const Rational& a, const Rational& b, const Integer& n);

/// Ordering of x and y, defined as the sign of x - y. Throws on mismatched radicands.
std::strong_ordering q_compare(const QuadReal& x, const QuadReal& y);
std::strong_ordering operator<=>(const QuadReal& x, const QuadReal& y);

enum class Rounding { floor, nearest };

/// floor(x * 10^places), determined by bracketing sqrt(n) between rationals
/// and tightening the bracket until both ends agree.
Integer floor_scaled(const QuadReal& x, int places);

/// Decimal expansion of x with `places` fractional digits.
std::string q_decimal(const QuadReal& x, int places, Rounding mode);
std::string rational_decimal(const Rational& x, int places, Rounding mode);

std::string to_string(const QuadReal& x);

}  // namespace seshcert

#include "seshcert/quad.hpp"

#include <cctype>
#include <stdexcept>

namespace seshcert {

namespace {

int sign_of(const Rational& x) { return x.sign(); }

Integer pow10(int places) {
    Integer p = 1;
    for (int i = 0; i < places; ++i) p *= 10;
    return p;
}

void require_same_field(const QuadReal& x, const QuadReal& y) {
    if (x.radicand() != y.radicand())
        throw std::invalid_argument("QuadReal: mismatched radicands " + x.radicand().str() +
                                    " and " + y.radicand().str());
}

// Decimal digit string to Integer. Boost reads a leading 0 as an octal prefix.
Integer decimal_digits(std::string_view digits) {
    const auto first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return 0;
    return Integer(std::string(digits.substr(first)));
}

std::string render_scaled(const Integer& t, int places) {
    const bool negative = t < 0;
    std::string digits = (negative ? Integer(-t) : t).str();
    if (digits.size() <= static_cast<std::size_t>(places))
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    return negative ? "-" + digits : digits;
}

}  // namespace

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt of a negative integer");
    return boost::multiprecision::sqrt(n);
}

Integer ceil_sqrt(const Integer& n) {
    Integer s = isqrt(n);
    return s * s == n ? s : s + 1;
}

std::int64_t ceil_sqrt(std::int64_t n) {
    return static_cast<std::int64_t>(ceil_sqrt(Integer(n)));
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    Integer s = isqrt(n);
    return s * s == n;
}

Rational parse_rational(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw fail();
        Integer d = decimal_digits(den);
        if (d == 0) throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
        value = Rational(decimal_digits(num), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw fail();
        Integer w = decimal_digits(whole);
        Integer f = decimal_digits(frac);
        Integer scale = pow10(static_cast<int>(frac.size()));
        value = Rational(w * scale + f, scale);
    } else {
        if (!all_digits(body)) throw fail();
        value = Rational(decimal_digits(body));
    }
    return negative ? Rational(-value) : value;
}

std::string rational_string(const Rational& x) {
    return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

std::string rational_string_short(const Rational& x) {
    if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
    return rational_string(x);
}

Integer floor_rational(const Rational& x) {
    const Integer num = boost::multiprecision::numerator(x);
    const Integer den = boost::multiprecision::denominator(x);
    Integer q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

QuadReal::QuadReal(Rational a, Rational b, Integer n) : a_(std::move(a)), b_(std::move(b)), n_(std::move(n)) {
    if (n_ < 2 || is_perfect_square(n_))
        throw std::invalid_argument("QuadReal radicand must be a non-square integer >= 2, got " + n_.str());
}

QuadReal operator+(const QuadReal& x, const QuadReal& y) {
    require_same_field(x, y);
    return {x.a_ + y.a_, x.b_ + y.b_, x.n_, QuadReal::Unchecked{}};
}

QuadReal operator-(const QuadReal& x, const QuadReal& y) {
    require_same_field(x, y);
    return {x.a_ - y.a_, x.b_ - y.b_, x.n_, QuadReal::Unchecked{}};
}

QuadReal operator*(const QuadReal& x, const QuadReal& y) {
    require_same_field(x, y);
    const Rational n(x.n_);
    return {x.a_ * y.a_ + x.b_ * y.b_ * n, x.a_ * y.b_ + x.b_ * y.a_, x.n_, QuadReal::Unchecked{}};
}

QuadReal operator/(const QuadReal& x, const QuadReal& y) {
    require_same_field(x, y);
    // y is zero iff its norm is zero, since sqrt(n) is irrational.
    const Rational norm = y.norm();
    if (norm == 0) throw std::domain_error("QuadReal: division by zero");
    QuadReal p = x * y.conjugate();
    return {p.a_ / norm, p.b_ / norm, x.n_, QuadReal::Unchecked{}};
}

QuadReal q_arith(const QuadReal& x, const QuadReal& y, ArithOp op) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
    }
    throw std::invalid_argument("unknown arithmetic op");
}

int surd_sign(const Rational& a, const Rational& b, const Integer& n) {
    if (n < 0) throw std::domain_error("surd_sign: negative radicand");
    const int sa = sign_of(a);
    const int sb = n == 0 ? 0 : sign_of(b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Mixed signs: |a| vs |b| sqrt(n), compared through a^2 vs b^2 n.
    const int d = sign_of(a * a - b * b * Rational(n));
    return d == 0 ? 0 : (d > 0 ? sa : sb);
}

int q_sign(const QuadReal& x) { return surd_sign(x.rational_part(), x.surd_part(), x.radicand()); }

std::strong_ordering q_compare(const QuadReal& x, const QuadReal& y) {
    const int s = q_sign(x - y);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const QuadReal& x, const QuadReal& y) { return q_compare(x, y); }

Integer floor_scaled(const QuadReal& x, int places) {
    if (places < 0) throw std::invalid_argument("floor_scaled: negative places");
    const Rational scale(pow10(places));
    const Rational a = x.rational_part() * scale;
    const Rational b = x.surd_part() * scale;
    if (b == 0) return floor_rational(a);

    const Integer& n = x.radicand();
    for (unsigned bits = 32;; bits *= 2) {
        // sqrt(n) lies strictly inside (s / 2^bits, (s + 1) / 2^bits).
        const Integer s = isqrt(n << (2 * bits));
        const Rational unit(Integer(1) << bits);
        const Rational lo = Rational(s) / unit;
        const Rational hi = Rational(s + 1) / unit;
        const Rational end1 = a + b * lo;
        const Rational end2 = a + b * hi;
        const Integer f1 = floor_rational(end1);
        const Integer f2 = floor_rational(end2);
        if (f1 == f2) return f1;
    }
}

std::string q_decimal(const QuadReal& x, int places, Rounding mode) {
    if (places < 1) throw std::invalid_argument("q_decimal: places must be >= 1");
    if (mode == Rounding::floor) return render_scaled(floor_scaled(x, places), places);
    const Rational half_ulp = Rational(1) / Rational(2 * pow10(places));
    return render_scaled(floor_scaled(x + QuadReal(half_ulp, x.radicand()), places), places);
}

std::string rational_decimal(const Rational& x, int places, Rounding mode) {
    if (places < 1) throw std::invalid_argument("rational_decimal: places must be >= 1");
    Rational scaled = x * Rational(pow10(places));
    if (mode == Rounding::nearest) scaled += Rational(1, 2);
    return render_scaled(floor_rational(scaled), places);
}

std::string to_string(const QuadReal& x) {
    return rational_string(x.rational_part()) + " + " + rational_string(x.surd_part()) + "*sqrt(" +
           x.radicand().str() + ")";
}

}  // namespace seshcert

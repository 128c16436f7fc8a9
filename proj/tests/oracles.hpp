#pragma once

// Test-only oracles. Nothing here calls into the QuadReal sign logic or the
// exclusion engine: values are checked with 100-digit binary floating point
// enclosures and with plain 128-bit integer arithmetic.

#include <cstdint>
#include <optional>
#include <set>
#include <tuple>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "seshcert/quad.hpp"

namespace oracle {

using Float = boost::multiprecision::cpp_bin_float_100;
using i128 = __int128;

inline Float to_float(const seshcert::Rational& q) {
    return Float(boost::multiprecision::numerator(q).str()) / Float(boost::multiprecision::denominator(q).str());
}

/// Sign of a + b sqrt(n) from a 100-digit evaluation treated as an interval of
/// half-width 1e-50 (scaled by the magnitude of the terms). nullopt when the
/// interval straddles zero.
inline std::optional<int> interval_sign(const seshcert::Rational& a, const seshcert::Rational& b, std::int64_t n) {
    const Float fa = to_float(a);
    const Float fb = to_float(b) * boost::multiprecision::sqrt(Float(n));
    const Float v = fa + fb;
    const Float radius = Float("1e-50") * (1 + abs(fa) + abs(fb));
    if (v > radius) return 1;
    if (v < -radius) return -1;
    return std::nullopt;
}

inline Float eval(const seshcert::Rational& a, const seshcert::Rational& b, std::int64_t n) {
    return to_float(a) + to_float(b) * boost::multiprecision::sqrt(Float(n));
}

/// Smallest s with s^2 >= n, by linear search from the double estimate.
inline std::int64_t ceil_sqrt_linear(std::int64_t n) {
    std::int64_t s = 0;
    while (static_cast<i128>(s) * s < n) ++s;
    return s;
}

/// Xu-type family value written out per case, directly from the inequality list.
inline std::int64_t family_value(std::int64_t k, std::int64_t r, std::int64_t m, std::int64_t big_m) {
    if (m == big_m) return r * m * m - m + 2 - k * k;
    if (big_m == 1) return (r - 1) * m * m + 1 - m + 2 - k * k;
    if (m == 1) return (r - 1) + big_m * big_m - big_m + 2 - k * k;
    if (big_m < m) return (r - 1) * m * m + big_m * big_m - big_m + 2 - k * k;
    return (r - 1) * m * m + big_m * big_m - m + 2 - k * k;
}

/// k / S < 1 / (sqrt(r) + p/q)  <=>  qS - kp > qk sqrt(r).
inline bool below_threshold(std::int64_t k, std::int64_t r, std::int64_t sum, std::int64_t p, std::int64_t q) {
    const i128 x = static_cast<i128>(q) * sum - static_cast<i128>(k) * p;
    return x > 0 && x * x > static_cast<i128>(q) * q * k * k * r;
}

using Triple = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

/// Naive double loop over m, M in [1, bound] for k = 1..k_max, with the paper's
/// filters evaluated in integer arithmetic. delta = p/q.
inline std::set<Triple> brute_force_survivors(std::int64_t r, std::int64_t p, std::int64_t q, std::int64_t k_max,
                                              std::int64_t bound = 40) {
    std::set<Triple> out;
    for (std::int64_t k = 1; k <= k_max; ++k)
        for (std::int64_t m = 1; m <= bound; ++m)
            for (std::int64_t big_m = 1; big_m <= bound; ++big_m) {
                if (m == 1 && big_m == 1) continue;
                const std::int64_t sum = (r - 1) * m + big_m;
                if (!below_threshold(k, r, sum, p, q)) continue;
                if (sum != ceil_sqrt_linear(r * k * k)) continue;
                if (m == big_m) {
                    if (r * m * m - k * k > m) continue;
                } else {
                    // sum - k sqrt(r) < 1/r  <=>  r sum - 1 < r k sqrt(r)
                    const i128 y = static_cast<i128>(r) * sum - 1;
                    if (y > 0 && y * y >= static_cast<i128>(r) * r * r * k * k) continue;
                }
                if (family_value(k, r, m, big_m) > 0) continue;
                out.emplace(k, m, big_m);
            }
    return out;
}

}  // namespace oracle

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "seshcert/quad.hpp"

using namespace seshcert;

namespace {

QuadReal q(const char* a, const char* b, long n) { return QuadReal(parse_rational(a), parse_rational(b), Integer(n)); }

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
    return Rational(num(rng), den(rng));
}

long random_non_square(std::mt19937_64& rng, long max_n) {
    std::uniform_int_distribution<long> dist(2, max_n);
    for (;;) {
        long n = dist(rng);
        if (!is_perfect_square(Integer(n))) return n;
    }
}

}  // namespace

TEST_CASE("field operations") {
    CHECK(q("1", "1", 2) + q("1", "-1", 2) == q("2", "0", 2));
    CHECK(q("0", "1", 2) * q("0", "1", 2) == q("2", "0", 2));

    const QuadReal inv = q("1", "0", 2) / q("0", "1", 2);
    CHECK(inv == q("0", "1/2", 2));
    CHECK(inv * q("0", "1", 2) == q("1", "0", 2));

    CHECK(q_arith(q("3", "1", 5), q("1", "1", 5), ArithOp::sub) == q("2", "0", 5));
    CHECK(q_arith(q("1", "1", 5), q("1", "-1", 5), ArithOp::mul) == q("-4", "0", 5));
}

TEST_CASE("field operation errors") {
    CHECK_THROWS_AS(q("1", "1", 2) + q("1", "1", 3), std::invalid_argument);
    CHECK_THROWS_AS(q_compare(q("1", "1", 2), q("1", "1", 3)), std::invalid_argument);
    CHECK_THROWS_AS(q("1", "1", 2) / q("0", "0", 2), std::domain_error);
    CHECK_THROWS_AS(q("1", "1", 4), std::invalid_argument);
    CHECK_THROWS_AS(q("1", "1", 1), std::invalid_argument);
    CHECK_THROWS_AS(q("1", "1", 0), std::invalid_argument);
}

TEST_CASE("q_sign examples") {
    CHECK(q_sign(q("0", "0", 2)) == 0);
    CHECK(q_sign(q("3", "-2", 2)) == 1);   // 9 > 8
    CHECK(q_sign(q("-1", "1", 2)) == 1);   // 2 > 1
    CHECK(q_sign(q("-3", "2", 2)) == -1);
    CHECK(q_sign(q("5", "0", 7)) == 1);
    CHECK(q_sign(q("0", "-1/3", 7)) == -1);
}

TEST_CASE("surd_sign handles square radicands") {
    CHECK(surd_sign(Rational(-3), Rational(1), Integer(9)) == 0);
    CHECK(surd_sign(Rational(-4), Rational(1), Integer(9)) == -1);
    CHECK(surd_sign(Rational(-28), Rational(1), Integer(841)) == 1);
    CHECK(surd_sign(Rational(5), Rational(-100), Integer(0)) == 1);
}

TEST_CASE("q_compare examples") {
    CHECK(q_compare(q("1", "0", 2), q("0", "1", 2)) == std::strong_ordering::less);
    const QuadReal x = q("3/7", "-5/11", 13);
    CHECK(q_compare(x, x) == std::strong_ordering::equal);
    CHECK(q_compare(q("0", "7", 2), q("10", "0", 2)) == std::strong_ordering::less);
    CHECK(q("0", "1", 2) > q("1", "0", 2));
}

TEST_CASE("ceil_sqrt examples and contract") {
    CHECK(ceil_sqrt(std::int64_t{0}) == 0);
    CHECK(ceil_sqrt(std::int64_t{9}) == 3);
    CHECK(ceil_sqrt(std::int64_t{4802}) == 70);
    CHECK(ceil_sqrt(std::int64_t{4761}) == 69);
    for (std::int64_t n = 1; n <= 20000; ++n) {
        const std::int64_t s = ceil_sqrt(n);
        REQUIRE(s * s >= n);
        REQUIRE((s - 1) * (s - 1) < n);
    }
    const Integer big = Integer(1) << 200;
    CHECK(ceil_sqrt(big) == Integer(1) << 100);
    CHECK(ceil_sqrt(big + 1) == (Integer(1) << 100) + 1);
}

TEST_CASE("parse_rational is exact") {
    CHECK(parse_rational("0.031") == Rational(31, 1000));
    CHECK(parse_rational("31/1000") == Rational(31, 1000));
    CHECK(parse_rational("0.010") == Rational(1, 100));
    CHECK(parse_rational("013") == Rational(13));
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("2.") == Rational(2));
    for (const char* bad : {"", "abc", "1/0", ".", "1.2.3", "1/", "/2", "0x10", "1e-3", "- 1"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
    CHECK(rational_string(Rational(2)) == "2/1");
    CHECK(rational_string_short(Rational(2)) == "2");
}

TEST_CASE("q_decimal examples") {
    const Integer ten(10), seven(7);
    const QuadReal t10 = QuadReal(1, ten) / QuadReal(Rational(13, 1000), Rational(1), ten);
    CHECK(q_decimal(t10, 4, Rounding::floor) == "0.3149");
    const QuadReal t7 = QuadReal(1, seven) / QuadReal(Rational(11, 1000), Rational(1), seven);
    CHECK(q_decimal(t7, 4, Rounding::floor) == "0.3763");
    CHECK(q_decimal(QuadReal(Rational(1, 2), Integer(2)), 4, Rounding::floor) == "0.5000");
    CHECK(q_decimal(q("0", "1", 2), 6, Rounding::floor) == "1.414213");
    CHECK(q_decimal(q("0", "1", 2), 6, Rounding::nearest) == "1.414214");
    CHECK(q_decimal(q("0", "-1", 2), 3, Rounding::floor) == "-1.415");
    CHECK(q_decimal(q("1000", "0", 3), 2, Rounding::floor) == "1000.00");
    CHECK(rational_decimal(Rational(1, 3), 4, Rounding::floor) == "0.3333");
    CHECK(rational_decimal(Rational(2, 3), 4, Rounding::nearest) == "0.6667");
    CHECK_THROWS_AS(q_decimal(q("0", "1", 2), 0, Rounding::floor), std::invalid_argument);
}

TEST_CASE("q_decimal floor contract and digit stability") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const QuadReal x(random_rational(rng, 1000, 97), random_rational(rng, 1000, 97), Integer(random_non_square(rng, 500)));
        const std::string four = q_decimal(x, 4, Rounding::floor);
        const std::string nine = q_decimal(x, 9, Rounding::floor);
        // Rendered value never exceeds x.
        CHECK(q_sign(x - QuadReal(parse_rational(four), x.radicand())) >= 0);
        // More digits only extend the expansion (non-negative values) or refine it downward.
        if (q_sign(x) > 0) CHECK(nine.substr(0, four.size()) == four);
        CHECK(parse_rational(nine) >= parse_rational(four));
    }
}

TEST_CASE("sign properties") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 3000; ++i) {
        const Integer n(random_non_square(rng, 200));
        const QuadReal x(random_rational(rng, 500, 50), random_rational(rng, 500, 50), n);
        const QuadReal y(random_rational(rng, 500, 50), random_rational(rng, 500, 50), n);
        REQUIRE(q_sign(x) == -q_sign(-x));
        REQUIRE(q_sign(x * y) == q_sign(x) * q_sign(y));
        REQUIRE((q_compare(x, y) == std::strong_ordering::less) == (q_compare(y, x) == std::strong_ordering::greater));
    }
}

TEST_CASE("q_sign agrees with interval evaluation on near ties") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> bdist(1, 1000000);
    std::uniform_int_distribution<int> off(-1, 1);
    for (int i = 0; i < 10000; ++i) {
        const long n = random_non_square(rng, 10000);
        const Integer b(bdist(rng));
        // a close to -b sqrt(n): the mixed-sign branch with a^2 - b^2 n tiny.
        const Integer a = -(isqrt(b * b * n) + off(rng));
        const QuadReal x{Rational(a), Rational(b), Integer(n)};
        const auto expected = oracle::interval_sign(Rational(a), Rational(b), n);
        REQUIRE(expected.has_value());
        REQUIRE(q_sign(x) == *expected);
    }
}

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "seshcert/surface.hpp"

using namespace seshcert;

TEST_CASE("fake projective plane invariants") {
    CHECK(FakeProjectivePlane::c1_sq == 9);
    CHECK(FakeProjectivePlane::c2 == 3);
    CHECK(FakeProjectivePlane::l1_sq == 1);
    CHECK(FakeProjectivePlane::gonality_floor == 2);
    const CurveClass c(7);
    CHECK(c.degree() == 7);
    CHECK(c.self_intersection() == 49);
    CHECK_THROWS_AS(CurveClass(0), std::invalid_argument);
    CHECK_THROWS_AS(CurveClass(-3), std::invalid_argument);
}

TEST_CASE("multiplicity pattern validation") {
    CHECK(MultiplicityPattern(5, 1, 2).total() == 6);
    CHECK(MultiplicityPattern(2, 0, 1).has_zero());
    CHECK_THROWS_AS(MultiplicityPattern(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(MultiplicityPattern(3, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(MultiplicityPattern(3, -1, 2), std::invalid_argument);
}

TEST_CASE("ratio") {
    CHECK(ratio(CurveClass(7), MultiplicityPattern(2, 5, 5)) == Rational(7, 10));
    CHECK(ratio(CurveClass(1), MultiplicityPattern(2, 1, 1)) == Rational(1, 2));
    CHECK(ratio(CurveClass(3), MultiplicityPattern(5, 1, 2)) == Rational(1, 2));

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> small(1, 30), rr(2, 40);
    for (int i = 0; i < 500; ++i) {
        const long k = small(rng), m = small(rng), big_m = small(rng), r = rr(rng), t = small(rng);
        REQUIRE(ratio(CurveClass(k), MultiplicityPattern(r, m, big_m)) ==
                ratio(CurveClass(t * k), MultiplicityPattern(r, t * m, t * big_m)));
    }
}

TEST_CASE("xu_floor") {
    CHECK(xu_floor(2) == 4);
    CHECK(xu_floor(3) == 8);
    CHECK(xu_floor(5) == 22);
    CHECK_THROWS_AS(xu_floor(1), std::invalid_argument);
    for (std::int64_t m = 2; m < 1000; ++m) REQUIRE(xu_floor(m) > m * m - m);
}

TEST_CASE("is_below_threshold examples") {
    const CurveClass c7(7);
    const MultiplicityPattern p55(2, 5, 5);
    CHECK_FALSE(is_below_threshold(c7, p55, Rational(31, 1000)));
    CHECK(is_below_threshold(c7, p55, Rational(1, 100)));
    CHECK(is_below_threshold(CurveClass(1), MultiplicityPattern(2, 1, 1), Rational(0)));
    CHECK_THROWS_AS(is_below_threshold(c7, MultiplicityPattern(4, 2, 2), Rational(1, 100)), std::invalid_argument);
    CHECK_THROWS_AS(is_below_threshold(c7, p55, Rational(-1, 100)), std::invalid_argument);
}

TEST_CASE("is_below_threshold is antitone in delta and matches interval evaluation") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> kd(1, 60), md(1, 50), rd(2, 300), dd(0, 200);
    int checked = 0;
    while (checked < 3000) {
        const long r = rd(rng);
        if (is_perfect_square(Integer(r))) continue;
        const long k = kd(rng), m = md(rng), big_m = md(rng);
        const Rational delta(dd(rng), 1000);
        const CurveClass c(k);
        const MultiplicityPattern p(r, m, big_m);
        const bool below = is_below_threshold(c, p, delta);
        // (S - k delta) - k sqrt(r) > 0
        const auto s = oracle::interval_sign(Rational(p.total()) - Rational(k) * delta, Rational(-k), r);
        if (s) REQUIRE(below == (*s > 0));
        if (below && delta > 0) REQUIRE(is_below_threshold(c, p, delta - Rational(1, 1000)));
        ++checked;
    }
}

TEST_CASE("threshold value") {
    const QuadReal t = threshold_value(2, Rational(31, 1000));
    CHECK(q_decimal(t, 4, Rounding::floor) == "0.6919");
    // 1/(sqrt(5) + 0.014) has no closed rational form but renders 0.4444.
    CHECK(q_decimal(threshold_value(5, Rational(14, 1000)), 4, Rounding::floor) == "0.4444");
}

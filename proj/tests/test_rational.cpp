#include "ingham/error.hpp"
#include "ingham/quad_number.hpp"
#include "ingham/rational.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace ingham;

TEST_CASE("rational arithmetic normalizes") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a + Rational(3, 2) == Rational(0));
    CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).frac() == Rational(1, 2));
    CHECK(Rational::parse(" -5/10 ") == Rational(-1, 2));
    CHECK(Rational(2, 3) < Rational(3, 4));
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(Rational(1, 0), Error);
    try {
        (void)Rational(0).inverse();
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
    try {
        (void)Rational::parse("1/x");
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
    const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
    try {
        (void)(big * big);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Overflow);
    }
}

TEST_CASE("quadratic field arithmetic") {
    const QuadNumber s3(Rational(0), Rational(1), 3);
    CHECK((s3 * s3).is_integer());
    CHECK(s3 * s3 == QuadNumber(3));
    const QuadNumber x(Rational(1), Rational(1, 2), 3);  // 1 + √3/2
    const QuadNumber inv = x.inverse();
    CHECK(x * inv == QuadNumber(1));
    CHECK(inv.to_double() == doctest::Approx(1.0 / (1.0 + std::sqrt(3.0) / 2)).epsilon(1e-14));
    CHECK((x - x).is_zero());
    CHECK(QuadNumber(Rational(1), Rational(5), 1) == QuadNumber(6));
    const QuadNumber s2(Rational(0), Rational(1), 2);
    try {
        (void)(s2 + s3);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FieldMismatch);
    }
    CHECK(s2 + QuadNumber(1) == QuadNumber(Rational(1), Rational(1), 2));
}

TEST_CASE("exact 2x2 matrices") {
    const QuadNumber h(Rational(1, 2));
    const QuadNumber r(Rational(0), Rational(1, 2), 3);
    const QMat2 m{{{QuadNumber(1), h}, {QuadNumber(0), r}}};
    const QMat2 mi = inverse(m);
    const QVec2 v{QuadNumber(Rational(2, 3)), QuadNumber(Rational(-1, 3))};
    const QVec2 back = mi * (m * v);
    CHECK(back[0] == v[0]);
    CHECK(back[1] == v[1]);
    CHECK(det(m) == r);
    const QMat2 singular{{{QuadNumber(1), QuadNumber(2)}, {QuadNumber(2), QuadNumber(4)}}};
    try {
        (void)inverse(singular);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularL);
    }
}

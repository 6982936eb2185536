#include "doctest.h"

#include "aptrans/rational.hpp"

using aptrans::HalfInt;
using aptrans::Rational;

TEST_CASE("rational normalization and printing") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("+4/6") == Rational(2, 3));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("1/"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("half integers") {
    const auto h = HalfInt::parse("3/2");
    CHECK(h.twice() == 3);
    CHECK_FALSE(h.is_integer());
    CHECK((h + HalfInt::from_twice(1)).is_integer());
    CHECK((h + HalfInt::from_twice(1)) == HalfInt(2));
    CHECK(h.str() == "3/2");
    CHECK(abs(-h) == h);
    CHECK(HalfInt(-1) < HalfInt::from_twice(-1));
    CHECK_THROWS(HalfInt::parse("1/3"));
    CHECK(HalfInt::from_rational(Rational(4, 2)) == HalfInt(2));
}

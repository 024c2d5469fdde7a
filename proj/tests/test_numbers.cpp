#include "toric/numbers.hpp"

#include "doctest.h"

using namespace toric;

TEST_CASE("rational to_string canonical form") {
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    // negative denominators must come in through division, which canonicalizes
    CHECK(to_string(Rational(3) / Rational(-4)) == "-3/4");
    CHECK(to_string(Rational(8, 4)) == "2");
    CHECK(to_string(Rational(0, 7)) == "0");
    CHECK(to_string(Rational(-6, 3)) == "-2");
    CHECK(to_string(Rational(599, 15)) == "599/15");
}

TEST_CASE("parse_rational round trip and normalization") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("  14 ") == Rational(14));
    CHECK(parse_rational("+5/10") == Rational(1, 2));
    CHECK(parse_rational("3/-4") == Rational(-3, 4));
    CHECK(parse_rational("-3/-4") == Rational(3, 4));
    CHECK(parse_rational("0") == Rational(0));
    for (const char* s : {"3/4", "-13/72", "0", "599/15", "-2"})
        CHECK(to_string(parse_rational(s)) == s);
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), input_error);
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("abc"), input_error);
    CHECK_THROWS_AS(parse_rational("1.5"), input_error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), input_error);
    CHECK_THROWS_AS(parse_rational("--3"), input_error);
}

TEST_CASE("decimal_string rounds half away from zero") {
    CHECK(decimal_string(Rational(1, 2), 0) == "1");
    CHECK(decimal_string(Rational(-1, 2), 0) == "-1");
    CHECK(decimal_string(Rational(1, 4), 1) == "0.3");
    CHECK(decimal_string(Rational(-1, 4), 1) == "-0.3");
    CHECK(decimal_string(Rational(1, 8), 2) == "0.13");
    CHECK(decimal_string(Rational(1, 3), 5) == "0.33333");
    CHECK(decimal_string(Rational(2, 3), 5) == "0.66667");
    CHECK(decimal_string(Rational(-13, 72), 6) == "-0.180556");
}

TEST_CASE("decimal_string pads and keeps sign sane") {
    CHECK(decimal_string(Rational(1), 3) == "1.000");
    CHECK(decimal_string(Rational(1, 10), 3) == "0.100");
    CHECK(decimal_string(Rational(0), 2) == "0.00");
    CHECK(decimal_string(Rational(-1, 1000), 2) == "0.00");  // not "-0.00"
    CHECK(decimal_string(Rational(-1, 100), 2) == "-0.01");
    CHECK(decimal_string(Rational(1001, 1000), 2) == "1.00");
    CHECK(decimal_string(Rational(25729, 100000), 5) == "0.25729");
}

TEST_CASE("floor and ceiling on rationals") {
    CHECK(floor_rat(Rational(7, 2)) == 3);
    CHECK(floor_rat(Rational(-7, 2)) == -4);
    CHECK(floor_rat(Rational(4)) == 4);
    CHECK(ceil_rat(Rational(7, 2)) == 4);
    CHECK(ceil_rat(Rational(-7, 2)) == -3);
    CHECK(ceil_rat(Rational(-4)) == -4);
}

TEST_CASE("gcd helper") {
    CHECK(gcd_int(Integer(12), Integer(18)) == 6);
    CHECK(gcd_int(Integer(-12), Integer(18)) == 6);
    CHECK(gcd_int(Integer(0), Integer(5)) == 5);
    CHECK(gcd_int(Integer(0), Integer(0)) == 0);
}

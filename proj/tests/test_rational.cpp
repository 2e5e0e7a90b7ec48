#include <doctest.h>

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "gearsynth/rational.hpp"

using gearsynth::Rational;

TEST_CASE("construction reduces to canonical form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).numerator() == 3);
  CHECK(Rational(6, 4).denominator() == 2);
  CHECK(Rational(-6, 4).numerator() == -3);
  CHECK(Rational(6, -4).numerator() == -3);   // sign moves to the numerator
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("integer conversion and predicates") {
  const Rational five = 5;
  CHECK(five.is_integer());
  CHECK(five.numerator() == 5);
  CHECK(Rational(1, 2).is_integer() == false);
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-1, 3).is_negative());
  CHECK(Rational(1, 3).is_negative() == false);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 7) == Rational(-3, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("comparison is exact cross-multiplication") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 2) > Rational(3));
  CHECK(Rational(10, 5) <= Rational(2));
  // Values whose cross products overflow int64 but not int128.
  const Rational big1(std::numeric_limits<std::int32_t>::max(), 3);
  const Rational big2(std::numeric_limits<std::int32_t>::max() - 1, 3);
  CHECK(big2 < big1);
}

TEST_CASE("abs and to_double") {
  CHECK(Rational(-3, 2).abs() == Rational(3, 2));
  CHECK(Rational(3, 2).abs() == Rational(3, 2));
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(-1, 4).to_double() == -0.25);
}

TEST_CASE("parse accepts integers, fractions, and decimals") {
  CHECK(Rational::parse("20") == Rational(20));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+3") == Rational(3));
  CHECK(Rational::parse("41/2") == Rational(41, 2));
  CHECK(Rational::parse("-41/2") == Rational(-41, 2));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("79.4") == Rational(397, 5));
  CHECK(Rational::parse("-0.05") == Rational(-1, 20));
  CHECK(Rational::parse("0.000922") == Rational(461, 500000));
  CHECK(Rational::parse(" 3/4 ") == Rational(3, 4));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("--5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("5."), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1e3"), std::invalid_argument);
}

TEST_CASE("parse guards digit count") {
  CHECK(Rational::parse("999999999999999999") == Rational(999999999999999999LL));
  CHECK_THROWS_AS(Rational::parse("9999999999999999999"), std::invalid_argument);
  // whole + fractional digits together may not exceed the guard
  CHECK_THROWS_AS(Rational::parse("9999999999.999999999"), std::invalid_argument);
  CHECK(Rational::parse("99999999.9") == Rational(999999999, 10));
}

TEST_CASE("overflow in arithmetic is detected, not wrapped") {
  const Rational huge(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(huge + huge, std::overflow_error);
  CHECK_THROWS_AS(huge * Rational(2), std::overflow_error);
  // Reduction can bring a 128-bit intermediate back into range.
  const Rational half(1, 2);
  CHECK(huge * half * Rational(2) == huge);
}

TEST_CASE("string rendering") {
  CHECK(Rational(20).str() == "20");
  CHECK(Rational(20).str_fraction() == "20/1");
  CHECK(Rational(41, 2).str() == "41/2");
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(0).str_fraction() == "0/1");
}

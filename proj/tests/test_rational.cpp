#include <doctest.h>

#include "folidx/errors.hpp"
#include "folidx/rational.hpp"

using folidx::BigInt;
using folidx::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(10, 6) == Rational(5, 3));
  CHECK(Rational(10, 6).numerator() == 5);
  CHECK(Rational(10, 6).denominator() == 3);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).denominator() == 2);
  CHECK(Rational(0, 7).str() == "0");
  CHECK_THROWS_AS(Rational(1, 0), folidx::ValidationError);
}

TEST_CASE("canonical serialization and parsing") {
  CHECK(Rational(5, 3).str() == "5/3");
  CHECK(Rational(-5, 3).str() == "-5/3");
  CHECK(Rational(42).str() == "42");
  CHECK(Rational::parse("5/3") == Rational(5, 3));
  CHECK(Rational::parse("-2/9") == Rational(-2, 9));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational::parse("10/6").str() == "5/3");
  CHECK_THROWS_AS(Rational::parse(""), folidx::ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), folidx::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), folidx::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), folidx::ParseError);
}

TEST_CASE("exact arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), folidx::ValidationError);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3) > Rational(-1, 2));
}

TEST_CASE("floor of signed fractions") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(6, 3).floor() == 2);
  CHECK(Rational(-6, 3).floor() == -2);
  CHECK(Rational(0).floor() == 0);
}

TEST_CASE("double conversion is exact on representable fractions") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(2, 3).to_double() == 2.0 / 3.0);
  CHECK(Rational(4, 6).to_double() == 2.0 / 3.0);
  CHECK(Rational(-11, 9).to_double() == -11.0 / 9.0);
}

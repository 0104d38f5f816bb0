#include "specbundle/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using specbundle::Int;
using specbundle::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  Rational x(Int(2), Int(4));
  CHECK(x.num() == 1);
  CHECK(x.den() == 2);

  Rational y(Int(1), Int(-2));
  CHECK(y.num() == -1);
  CHECK(y.den() == 2);

  Rational z(Int(0), Int(7));
  CHECK(z == Rational(0));
  CHECK(z.den() == 1);

  CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  Rational third(Int(1), Int(3));
  Rational sixth(Int(1), Int(6));
  CHECK(third + sixth == Rational(Int(1), Int(2)));
  CHECK(third - sixth == sixth);
  CHECK(third * Rational(Int(3), Int(5)) == Rational(Int(1), Int(5)));
  CHECK(third / sixth == Rational(2));
  CHECK(-third == Rational(Int(-1), Int(3)));
  CHECK_THROWS_AS(third / Rational(0), std::invalid_argument);

  // a/b + c/d - a/b == c/d survives intermediate blowup
  Rational big(Int("123456789123456789"), Int("987654321987654321"));
  Rational small(Int(-7), Int(11));
  CHECK(big + small - big == small);
}

TEST_CASE("ordering by cross multiplication") {
  CHECK(Rational(Int(1), Int(3)) < Rational(Int(1), Int(2)));
  CHECK(Rational(Int(-1), Int(2)) < Rational(Int(-1), Int(3)));
  CHECK(Rational(Int(7), Int(2)) > Rational(3));
  CHECK(Rational(Int(4), Int(2)) == Rational(2));
  CHECK(Rational(-5) <= Rational(-5));
}

TEST_CASE("floor and ceil round toward the correct infinities") {
  CHECK(Rational(Int(7), Int(2)).floor() == 3);
  CHECK(Rational(Int(7), Int(2)).ceil() == 4);
  CHECK(Rational(Int(-7), Int(2)).floor() == -4);
  CHECK(Rational(Int(-7), Int(2)).ceil() == -3);
  CHECK(Rational(Int(-8), Int(4)).floor() == -2);
  CHECK(Rational(Int(-8), Int(4)).ceil() == -2);
  CHECK(Rational(5).floor() == 5);
  CHECK(Rational(5).ceil() == 5);
}

TEST_CASE("string form and parsing round-trip") {
  CHECK(Rational(Int(-3), Int(4)).str() == "-3/4");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-3/4") == Rational(Int(-3), Int(4)));
  CHECK(Rational::parse("6/-4") == Rational(Int(-3), Int(2)));
  CHECK(Rational::parse("123456789012345678901234567890").num() ==
        Int("123456789012345678901234567890"));

  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("--2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("-"), std::invalid_argument);
}

TEST_CASE("integer floor and ceil division") {
  using specbundle::ceil_div;
  using specbundle::floor_div;
  CHECK(floor_div(7, 2) == 3);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(floor_div(7, -2) == -4);
  CHECK(ceil_div(7, -2) == -3);
  CHECK(floor_div(-7, -2) == 3);
  CHECK(ceil_div(-7, -2) == 4);
  CHECK(floor_div(6, 3) == 2);
  CHECK(ceil_div(6, 3) == 2);
  CHECK_THROWS_AS(floor_div(1, 0), std::invalid_argument);
}

TEST_CASE("narrowing to 64 bits is checked") {
  CHECK(specbundle::to_int64(Int(-42)) == -42);
  CHECK_THROWS_AS(specbundle::to_int64(Int("9223372036854775808")), std::overflow_error);
}

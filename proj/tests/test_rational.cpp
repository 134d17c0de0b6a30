#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parkgram/rational.hpp"
#include "test_util.hpp"

using namespace parkgram;

TEST_CASE("construction normalizes to canonical form") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);

  CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
  CHECK(Rational(BigInt(-10), BigInt(-5)) == Rational(2));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("parse and print round-trip") {
  CHECK(Rational::parse("3/4").str() == "3/4");
  CHECK(Rational::parse("-6/8").str() == "-3/4");
  CHECK(Rational::parse("12").str() == "12");
  CHECK(Rational::parse(" -12 ").str() == "-12");
  CHECK(Rational::parse("4/2").str() == "2");
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("1/x"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
}

TEST_CASE("arithmetic is exact") {
  Rational half(BigInt(1), BigInt(2));
  CHECK(half + half == Rational(1));
  CHECK(half - half == Rational(0));
  CHECK(half * Rational(4) == Rational(2));
  CHECK(Rational(1) / Rational(3) + Rational(1) / Rational(6) == half);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("comparisons use cross multiplication") {
  CHECK(Rational::parse("1/3") < Rational::parse("2/5"));
  CHECK(Rational::parse("-1/2") < Rational(0));
  CHECK(Rational(2) > Rational::parse("3/2"));
}

TEST_CASE("pow handles negative exponents and 0^0") {
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK(Rational::parse("2/3").pow(2) == Rational::parse("4/9"));
  CHECK(Rational::parse("2/3").pow(-2) == Rational::parse("9/4"));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK_THROWS_AS(Rational(0).pow(-1), Error);
  try {
    Rational(0).pow(-1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroToNegativePower);
  }
}

TEST_CASE("floor rounds toward minus infinity") {
  CHECK(Rational::parse("7/2").floor() == 3);
  CHECK(Rational::parse("-7/2").floor() == -4);
  CHECK(Rational(5).floor() == 5);
  CHECK(Rational::parse("-6/3").floor() == -2);
}

TEST_CASE("field laws on random values") {
  testutil::Rng rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = rng.rational(9, 5);
    Rational b = rng.rational(9, 5);
    Rational c = rng.rational(9, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

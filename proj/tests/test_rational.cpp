#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "cext/rational.hpp"

using cext::Rational;

TEST_CASE("canonical form") {
  const Rational r(-6, 8);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(4, 2).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse fractions, integers and finite decimals exactly") {
  CHECK(Rational::parse("1/3") == Rational(1, 3));
  CHECK(Rational::parse("-2/4") == Rational(-1, 2));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(Rational::parse("1.5e-3") == Rational(3, 2000));
  CHECK(Rational::parse("2E2") == Rational(200));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  // 0.1 is not a double; the parse must still be exact
  CHECK(Rational::parse("0.1") * Rational(10) == Rational(1));

  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("nan"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("floor and ceil round toward the right infinities") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(5).floor() == 5);
  CHECK(Rational(5).ceil() == 5);
  CHECK_THROWS_AS(Rational::parse("1e40").floor(), std::overflow_error);
}

TEST_CASE("arithmetic and ordering") {
  const Rational a(1, 3);
  const Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(b < a);
  CHECK(a > b);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-2, 3).sign() == -1);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("string forms") {
  CHECK(Rational(-5, 10).str() == "-1/2");
  CHECK(Rational(4).str() == "4");
  std::ostringstream out;
  out << Rational(31, 2);
  CHECK(out.str() == "31/2");
  CHECK(Rational::parse(Rational(-22, 7).str()) == Rational(-22, 7));
  CHECK(Rational(1, 4).to_double() == 0.25);
}

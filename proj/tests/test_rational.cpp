#include <doctest.h>

#include "efforge/rational.hpp"

using namespace efforge;

TEST_CASE("string round trip") {
  CHECK(rational_to_string(rational_from_string("3/6")) == "1/2");
  CHECK(rational_to_string(rational_from_string("-4/2")) == "-2");
  CHECK(rational_to_string(Rational(7)) == "7");
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
}

TEST_CASE("decimal rendering") {
  CHECK(has_finite_decimal(rational_from_string("3/4")));
  CHECK(rational_to_decimal(rational_from_string("3/4")) == "0.75");
  CHECK(rational_to_decimal(rational_from_string("-1/8")) == "-0.125");
  CHECK(rational_to_decimal(Rational(5)) == "5");
  CHECK(rational_to_decimal(rational_from_string("1/10")) == "0.1");
  CHECK(rational_to_decimal(rational_from_string("25/10")) == "2.5");
  CHECK_FALSE(has_finite_decimal(rational_from_string("1/3")));
  CHECK_FALSE(has_finite_decimal(rational_from_string("5/6")));
}

TEST_CASE("combinatorial helpers") {
  CHECK(factorial(5) == 120);
  CHECK(double_factorial(5) == 15);   // matchings of K_6
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  // C(5/2, 2) = (5/2)(3/2)/2 = 15/8
  CHECK(binomial_general(rational_from_string("5/2"), 2) == rational_from_string("15/8"));
  CHECK(binomial_general(Rational(0), 1) == 0);
  CHECK(binomial_general(Rational(4), 2) == 6);
}

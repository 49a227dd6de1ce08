#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "closures/rational.hpp"

using namespace closures;

TEST_CASE("rationals are canonical") {
  Rational half(1, 2);
  CHECK(half == make_rational(2, 4));
  CHECK(to_string(half) == "1/2");
  CHECK(to_string(make_rational(4, 2) - Rational(1)) == "1");
  CHECK(to_string(make_rational(3, -6)) == "-1/2");
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  // arithmetic on canonical inputs stays canonical
  Rational sum = half + make_rational(1, 6);
  CHECK(to_string(sum) == "2/3");
}

TEST_CASE("rational parsing round-trips") {
  for (const char* text : {"0", "3", "-7", "1/2", "-22/7", "100000000000000000001/3"}) {
    Rational q = rational_from_string(text);
    CHECK(to_string(q) == text);
  }
  CHECK(rational_from_string("2/4") == Rational(1, 2));
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
}

TEST_CASE("integer helpers") {
  CHECK(pow_ui(Integer(7), 5) == Integer(16807));
  CHECK(to_long(Integer(42)) == 42);
  Integer huge = pow_ui(Integer(2), 200);
  CHECK_THROWS_AS(to_long(huge), std::overflow_error);
}

#include <doctest.h>

#include <stdexcept>

#include "affinv/rational.hpp"

using namespace affinv;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  const Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("10/-4") == make_rational(-5, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-0/3") == 0);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
}

TEST_CASE("floor_to_int64 and is_integer") {
  CHECK(floor_to_int64(make_rational(7, 2)) == 3);
  CHECK(floor_to_int64(make_rational(-7, 2)) == -4);
  CHECK(is_integer(make_rational(9, 3)));
  CHECK_FALSE(is_integer(make_rational(1, 3)));
  Rational huge(BigInt("100000000000000000000000"));
  CHECK_THROWS_AS(floor_to_int64(huge), std::overflow_error);
}

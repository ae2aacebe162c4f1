#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "gkverma/rational.hpp"

namespace gkverma {

TEST_CASE("parse_rational accepts integers and fractions", "[rational]") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+2") == Rational(2));
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-9/6") == Rational(-3, 2));
  CHECK(parse_rational("0/5") == Rational(0));
  CHECK(parse_rational(" 5/4 ") == Rational(5, 4));
}

TEST_CASE("parse_rational rejects malformed input", "[rational]") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("2 3"), std::invalid_argument);
}

TEST_CASE("parse_rational_list splits on commas", "[rational]") {
  const std::vector<Rational> values = parse_rational_list("2, 0, 3, -1/2");
  REQUIRE(values.size() == 4);
  CHECK(values[0] == 2);
  CHECK(values[1] == 0);
  CHECK(values[2] == 3);
  CHECK(values[3] == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational_list("1,,2"), std::invalid_argument);
}

TEST_CASE("format_rational is canonical", "[rational]") {
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK(format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(format_rational(Rational(0)) == "0");
  // round trip
  for (const char* text : {"7/3", "-11/2", "0", "42"})
    CHECK(format_rational(parse_rational(text)) == text);
}

TEST_CASE("integer and half-odd predicates", "[rational]") {
  CHECK(is_integer(Rational(4)));
  CHECK(is_integer(Rational(-6, 3)));
  CHECK_FALSE(is_integer(Rational(1, 2)));
  CHECK(is_half_odd(Rational(1, 2)));
  CHECK(is_half_odd(Rational(-7, 2)));
  CHECK_FALSE(is_half_odd(Rational(3)));
  CHECK_FALSE(is_half_odd(Rational(1, 3)));
}

TEST_CASE("floor_rational rounds toward minus infinity", "[rational]") {
  CHECK(floor_rational(Rational(7, 2)) == 3);
  CHECK(floor_rational(Rational(-7, 2)) == -4);
  CHECK(floor_rational(Rational(-3)) == -3);
  CHECK(floor_rational(Rational(0)) == 0);
  CHECK(floor_rational(Rational(-1, 3)) == -1);
}

}  // namespace gkverma

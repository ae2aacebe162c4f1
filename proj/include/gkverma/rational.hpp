#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace gkverma {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "a" or "a/b" with an optional sign on a and b > 0 after
// normalization.  Decimal notation is rejected on purpose: every quantity in
// this library is exact, so "3/2" is the only way to spell 1.5.
Rational parse_rational(std::string_view text);

// Comma-separated list of rationals, e.g. "2, 0, 3, -1/2".
std::vector<Rational> parse_rational_list(std::string_view text);

// Lowest terms, positive denominator, no "/1" suffix.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

// Member of 1/2 + Z.
bool is_half_odd(const Rational& value);

// Largest integer <= value.
Integer floor_rational(const Rational& value);

}  // namespace gkverma

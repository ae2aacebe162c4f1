#include "gkverma/rational.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

namespace gkverma {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

std::optional<Integer> parse_integer(std::string_view digits, bool allow_sign) {
  bool negative = false;
  if (allow_sign && !digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) return std::nullopt;
  Integer value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view body = trim(text);
  const auto fail = [&text]() {
    return std::invalid_argument("expected an integer or fraction a/b, got '" + std::string(text) + "'");
  };
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    const auto value = parse_integer(body, true);
    if (!value) throw fail();
    return Rational(*value);
  }
  const auto num = parse_integer(trim(body.substr(0, slash)), true);
  const auto den = parse_integer(trim(body.substr(slash + 1)), false);
  if (!num || !den) throw fail();
  if (*den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(*num, *den);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    values.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::string format_rational(const Rational& value) { return value.str(); }

bool is_integer(const Rational& value) { return denominator(value) == 1; }

bool is_half_odd(const Rational& value) { return denominator(value) == 2; }

Integer floor_rational(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  Integer quotient = num / den;  // truncates toward zero
  if (num < 0 && quotient * den != num) --quotient;
  return quotient;
}

}  // namespace gkverma

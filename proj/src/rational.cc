// Copyright 2026 The Quantlint Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quantlint/rational.h"

#include <cctype>
#include <stdexcept>

namespace quantlint {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int reads a leading 0 as an octal prefix; decimal input must not.
Integer decimal_integer(std::string_view digits) {
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return Integer{std::string(digits.substr(first))};
}

std::optional<Integer> integer_root(const Integer& value, long degree) {
  if (value < 0) return std::nullopt;
  if (value < 2) return value;
  // Binary search on [0, value]; exponents here are tiny.
  Integer lo = 0;
  Integer hi = value;
  while (lo <= hi) {
    Integer mid = (lo + hi) / 2;
    Integer p = boost::multiprecision::pow(mid, static_cast<unsigned>(degree));
    if (p == value) return mid;
    if (p < value) {
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer d = decimal_integer(den);
    if (d == 0) return std::nullopt;
    result = Rational(decimal_integer(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    Integer scale = boost::multiprecision::pow(Integer(10),
                                               static_cast<unsigned>(frac.size()));
    Integer digits = decimal_integer(std::string(whole) + std::string(frac));
    result = Rational(digits, scale);
  } else {
    if (!all_digits(text)) return std::nullopt;
    result = Rational(decimal_integer(text));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& r) { return r.str(); }

std::string to_decimal_string(const Rational& r) {
  Integer den = boost::multiprecision::denominator(r);
  Integer num = boost::multiprecision::numerator(r);
  if (den == 1) return num.str();

  Integer rest = den;
  unsigned twos = 0;
  unsigned fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return r.str();

  unsigned places = std::max(twos, fives);
  Integer scaled = num * boost::multiprecision::pow(Integer(10), places) / den;
  bool negative = scaled < 0;
  std::string digits = (negative ? Integer(-scaled) : scaled).str();
  if (digits.size() <= places) {
    digits.insert(0, places - digits.size() + 1, '0');
  }
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer num = boost::multiprecision::pow(
      boost::multiprecision::numerator(base), static_cast<unsigned>(exponent));
  Integer den = boost::multiprecision::pow(
      boost::multiprecision::denominator(base), static_cast<unsigned>(exponent));
  return Rational(num, den);
}

std::optional<Rational> exact_root(const Rational& value, long degree) {
  if (degree <= 0) return std::nullopt;
  if (degree == 1) return value;
  auto num = integer_root(boost::multiprecision::numerator(value), degree);
  auto den = integer_root(boost::multiprecision::denominator(value), degree);
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace quantlint

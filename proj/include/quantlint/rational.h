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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace quantlint {

// Exact rational used for dimension exponents, conversion factors and
// scalar literals. Always stored normalized with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Parses `123`, `-4`, `0.9144`, `3/4` or `-1/2`. Returns nullopt on anything
// else (including a zero denominator).
std::optional<Rational> parse_rational(std::string_view text);

// Shortest exact rendering: `2`, `-1/2`. Used for exponents.
std::string to_string(const Rational& r);

// Renders a terminating fraction as a decimal (`0.5`, `1609.344`); falls back
// to `p/q` when the denominator has prime factors other than 2 and 5.
std::string to_decimal_string(const Rational& r);

// Raises to an integral power; negative powers invert.
Rational pow(const Rational& base, long exponent);

// Exact root of a rational, if one exists (`root(9/4, 2) == 3/2`).
std::optional<Rational> exact_root(const Rational& value, long degree);

}  // namespace quantlint

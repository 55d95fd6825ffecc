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

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quantlint/dims.h"
#include "quantlint/rational.h"

namespace quantlint {

// A unit relative to the SI base representation:
//   value_in_si = factor * value + offset
// `offset` is non-zero only for affine scales such as Celsius.
struct UnitSpec {
  Dims dims;
  Rational factor = 1;
  Rational offset = 0;

  bool is_affine() const { return offset != 0; }

  friend bool operator==(const UnitSpec&, const UnitSpec&) = default;
};

class UnitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownUnit : public UnitError {
 public:
  explicit UnknownUnit(std::string symbol);
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

// An affine unit used with a power, product or quotient.
class AffineComposition : public UnitError {
 public:
  explicit AffineComposition(std::string symbol);
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

class MalformedUnit : public UnitError {
 public:
  MalformedUnit(std::string_view text, std::string_view why);
};

class Incommensurable : public std::runtime_error {
 public:
  Incommensurable(const UnitSpec& from, const UnitSpec& to);
};

// Symbol -> unit. Immutable once handed to the checker.
class UnitTable {
 public:
  void define(std::string symbol, UnitSpec spec);
  const UnitSpec* find(std::string_view symbol) const;
  std::vector<std::string> symbols() const;

 private:
  std::map<std::string, UnitSpec, std::less<>> units_;
};

// SI base units (m, kg, s), the Table-1 style derived aliases (Hz, N, Pa, J,
// W) and the international yard, foot and mile.
const UnitTable& default_unit_table();

// Resolves a unit expression such as `N*m`, `m * s^-1`, `kg*m^2/s^2` or
// `m^(1/2)`. `1` denotes the dimensionless unit.
UnitSpec unit_to_spec(std::string_view expr, const UnitTable& table);

// v_to = scale * v_from + offset
struct Conversion {
  Rational scale = 1;
  Rational offset = 0;

  friend bool operator==(const Conversion&, const Conversion&) = default;
};

Conversion conversion_factor(const UnitSpec& from, const UnitSpec& to);

class OverlayError : public std::runtime_error {
 public:
  OverlayError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Applies an overlay file of the form
//   symbol = <unit-expression> [factor <rational>] [offset <rational>]
// one definition per line; `#` or `--` start a comment. Later lines may use
// and shadow earlier symbols.
UnitTable load_unit_overlay(std::string_view text, UnitTable base);

}  // namespace quantlint

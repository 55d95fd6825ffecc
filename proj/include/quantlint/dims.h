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

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "quantlint/rational.h"

namespace quantlint {

// Base dimensions tracked by the checker. Electric current, temperature,
// amount of substance and luminous intensity would be appended here; every
// rule works over `kBaseDimensionCount` and never assumes three.
enum class BaseDimension : std::size_t { kLength = 0, kMass = 1, kTime = 2 };
inline constexpr std::size_t kBaseDimensionCount = 3;

// Product-of-powers exponent vector, e.g. velocity is (1,0,-1).
class Dims {
 public:
  using Exponents = std::array<Rational, kBaseDimensionCount>;

  Dims() = default;
  explicit Dims(Exponents exponents) : exponents_(std::move(exponents)) {}
  Dims(Rational length, Rational mass, Rational time)
      : exponents_{std::move(length), std::move(mass), std::move(time)} {}

  static Dims dimensionless() { return Dims(); }
  static Dims base(BaseDimension d);

  const Rational& operator[](BaseDimension d) const {
    return exponents_[static_cast<std::size_t>(d)];
  }
  const Exponents& exponents() const { return exponents_; }
  bool is_dimensionless() const;

  // Every exponent multiplied by `power`.
  Dims scaled(const Rational& power) const;

  friend bool operator==(const Dims&, const Dims&) = default;

 private:
  Exponents exponents_{};
};

// `(2,1,-2)`; fractional exponents print as `1/2`.
std::string to_string(const Dims& d);

class DimMismatch : public std::runtime_error {
 public:
  DimMismatch(Dims lhs, Dims rhs);

  const Dims& lhs() const { return lhs_; }
  const Dims& rhs() const { return rhs_; }

 private:
  Dims lhs_;
  Dims rhs_;
};

// +̂ : defined only for equal vectors (dimensional homogeneity).
Dims dim_add(const Dims& a, const Dims& b);

// ×̂ : componentwise sum.
Dims dim_mul(const Dims& a, const Dims& b);

// Componentwise difference, the inverse of dim_mul.
Dims dim_div(const Dims& a, const Dims& b);

}  // namespace quantlint

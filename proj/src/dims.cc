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

#include "quantlint/dims.h"

#include <fmt/format.h>

#include <algorithm>

namespace quantlint {

Dims Dims::base(BaseDimension d) {
  Exponents e{};
  e[static_cast<std::size_t>(d)] = 1;
  return Dims(std::move(e));
}

bool Dims::is_dimensionless() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](const Rational& r) { return r == 0; });
}

Dims Dims::scaled(const Rational& power) const {
  Exponents e = exponents_;
  for (auto& x : e) x *= power;
  return Dims(std::move(e));
}

std::string to_string(const Dims& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < kBaseDimensionCount; ++i) {
    if (i > 0) out += ",";
    out += to_string(d.exponents()[i]);
  }
  return out + ")";
}

DimMismatch::DimMismatch(Dims lhs, Dims rhs)
    : std::runtime_error(fmt::format("dimension mismatch: {} vs {}",
                                     to_string(lhs), to_string(rhs))),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

Dims dim_add(const Dims& a, const Dims& b) {
  if (a != b) throw DimMismatch(a, b);
  return a;
}

Dims dim_mul(const Dims& a, const Dims& b) {
  Dims::Exponents e{};
  for (std::size_t i = 0; i < kBaseDimensionCount; ++i) {
    e[i] = a.exponents()[i] + b.exponents()[i];
  }
  return Dims(std::move(e));
}

Dims dim_div(const Dims& a, const Dims& b) {
  Dims::Exponents e{};
  for (std::size_t i = 0; i < kBaseDimensionCount; ++i) {
    e[i] = a.exponents()[i] - b.exponents()[i];
  }
  return Dims(std::move(e));
}

}  // namespace quantlint

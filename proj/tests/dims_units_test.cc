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


#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "quantlint/dims.h"
#include "quantlint/rational.h"
#include "quantlint/units.h"
#include "test_support.h"

namespace quantlint {
namespace {

using testing::random_rational;

Dims random_dims(std::mt19937_64& rng) {
  return Dims(random_rational(rng), random_rational(rng), random_rational(rng));
}

constexpr int kTrials = 2000;

TEST(DimAdd, EqualVectors) {
  EXPECT_EQ(dim_add(Dims(1, 0, -1), Dims(1, 0, -1)), Dims(1, 0, -1));
  EXPECT_EQ(dim_add(Dims(), Dims()), Dims());
}

TEST(DimAdd, UnequalVectorsMismatch) {
  try {
    dim_add(Dims(1, 0, 0), Dims(0, 0, 1));
    FAIL() << "expected DimMismatch";
  } catch (const DimMismatch& e) {
    EXPECT_EQ(e.lhs(), Dims(1, 0, 0));
    EXPECT_EQ(e.rhs(), Dims(0, 0, 1));
  }
}

TEST(DimMul, Examples) {
  EXPECT_EQ(dim_mul(Dims(1, 0, 0), Dims(0, 0, -1)), Dims(1, 0, -1));
  EXPECT_EQ(dim_mul(Dims(1, 1, -2), Dims(1, 0, 0)), Dims(2, 1, -2));
  EXPECT_EQ(dim_mul(Dims(3, 1, 2), Dims()), Dims(3, 1, 2));
}

TEST(DimDiv, Examples) {
  EXPECT_EQ(dim_div(Dims(2, 1, -2), Dims(0, 0, 2)), Dims(2, 1, -4));
  EXPECT_EQ(dim_div(Dims(2, 1, 0), Dims(0, 0, 2)), Dims(2, 1, -2));
  EXPECT_TRUE(dim_div(Dims(Rational(1, 3), 2, -1), Dims(Rational(1, 3), 2, -1))
                  .is_dimensionless());
}

TEST(Dims, RationalsAreNormalized) {
  Dims d(Rational(2, 4), Rational(3, 6), Rational(-4, 8));
  EXPECT_EQ(d, Dims(Rational(1, 2), Rational(1, 2), Rational(-1, 2)));
  EXPECT_EQ(to_string(d), "(1/2,1/2,-1/2)");
  EXPECT_EQ(to_string(Dims(2, 1, -2)), "(2,1,-2)");
}

TEST(DimsGroup, Commutative) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < kTrials; ++i) {
    Dims a = random_dims(rng), b = random_dims(rng);
    ASSERT_EQ(dim_mul(a, b), dim_mul(b, a));
  }
}

TEST(DimsGroup, Associative) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < kTrials; ++i) {
    Dims a = random_dims(rng), b = random_dims(rng), c = random_dims(rng);
    ASSERT_EQ(dim_mul(dim_mul(a, b), c), dim_mul(a, dim_mul(b, c)));
  }
}

TEST(DimsGroup, IdentityAndInverse) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < kTrials; ++i) {
    Dims a = random_dims(rng);
    ASSERT_EQ(dim_mul(a, Dims()), a);
    ASSERT_EQ(dim_mul(a, dim_div(Dims(), a)), Dims());
  }
}

TEST(DimsGroup, DivisionUndoesMultiplication) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < kTrials; ++i) {
    Dims a = random_dims(rng), b = random_dims(rng);
    ASSERT_EQ(dim_mul(dim_div(a, b), b), a);
  }
}

TEST(DimsGroup, AddIsIdempotentAndPartial) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < kTrials; ++i) {
    Dims a = random_dims(rng), b = random_dims(rng);
    ASSERT_EQ(dim_add(a, a), a);
    if (a == b) continue;
    ASSERT_THROW(dim_add(a, b), DimMismatch);
  }
}

// Each derived unit next to its base-unit expansion as printed in the SI
// table, and the exponent tuple read off that expansion by hand.
struct TableRow {
  const char* alias;
  const char* expansion;
  Dims dims;
};

const TableRow kTable[] = {
    {"Hz", "s^-1", Dims(0, 0, -1)},
    {"N", "m * kg * s^-2", Dims(1, 1, -2)},
    {"Pa", "m^-1 * kg * s^-2", Dims(-1, 1, -2)},
    {"J", "m^2 * kg * s^-2", Dims(2, 1, -2)},
    {"N*m", "m^2 * kg * s^-2", Dims(2, 1, -2)},
    {"W", "m^2 * kg * s^-3", Dims(2, 1, -3)},
};

TEST(UnitTable, AliasesReconstructExpansion) {
  const UnitTable& t = default_unit_table();
  for (const auto& row : kTable) {
    UnitSpec alias = unit_to_spec(row.alias, t);
    UnitSpec expanded = unit_to_spec(row.expansion, t);
    EXPECT_EQ(alias, expanded) << row.alias;
    EXPECT_EQ(alias.dims, row.dims) << row.alias;
    EXPECT_EQ(alias.factor, 1) << row.alias;
  }
}

TEST(UnitTable, EveryAliasCoveredByTableRow) {
  std::vector<std::string> derived;
  for (const auto& sym : default_unit_table().symbols()) {
    const UnitSpec* s = default_unit_table().find(sym);
    ASSERT_NE(s, nullptr);
    int nonzero = 0;
    for (const auto& e : s->dims.exponents()) nonzero += e != 0;
    if (s->factor == 1 && nonzero > 1) derived.push_back(sym);
  }
  for (const auto& sym : derived) {
    bool found = false;
    for (const auto& row : kTable) found |= sym == row.alias;
    EXPECT_TRUE(found) << sym;
  }
}

TEST(UnitToSpec, Examples) {
  const UnitTable& t = default_unit_table();
  EXPECT_EQ(unit_to_spec("J", t).dims, Dims(2, 1, -2));
  EXPECT_EQ(unit_to_spec("m * s^-1", t), (UnitSpec{Dims(1, 0, -1)}));
  EXPECT_EQ(unit_to_spec("m/s", t), (UnitSpec{Dims(1, 0, -1)}));
  EXPECT_EQ(unit_to_spec("kg*m^2", t).dims, Dims(2, 1, 0));
  EXPECT_EQ(unit_to_spec("1", t), UnitSpec{});
  EXPECT_EQ(unit_to_spec("(m/s)^2", t).dims, Dims(2, 0, -2));
  EXPECT_EQ(unit_to_spec("m^(1/2)", t).dims, Dims(Rational(1, 2), 0, 0));
  EXPECT_EQ(unit_to_spec("m^010", t).dims, Dims(10, 0, 0));
}

// Statutory inch: exactly 2.54 cm. Yard = 36 in, foot = 12 in,
// mile = 5280 ft = 63360 in.
const Rational kInch(254, 10000);

TEST(UnitToSpec, ImperialLengthsMatchInchDefinition) {
  const UnitTable& t = default_unit_table();
  EXPECT_EQ(unit_to_spec("yard", t).factor, kInch * 36);
  EXPECT_EQ(unit_to_spec("yard", t).factor, Rational(9144, 10000));
  EXPECT_EQ(unit_to_spec("foot", t).factor, kInch * 12);
  EXPECT_EQ(unit_to_spec("mile", t).factor, kInch * 63360);
  EXPECT_EQ(unit_to_spec("yard", t).dims, Dims(1, 0, 0));
}

TEST(UnitToSpec, FactorsCompose) {
  const UnitTable& t = default_unit_table();
  EXPECT_EQ(unit_to_spec("yard^2", t).factor, kInch * kInch * 36 * 36);
  EXPECT_EQ(unit_to_spec("mile / s", t).factor, kInch * 63360);
  EXPECT_EQ(unit_to_spec("m / foot", t).factor, 1 / (kInch * 12));
}

TEST(UnitToSpec, FractionalPowerNeedsExactRoot) {
  UnitTable t = default_unit_table();
  t.define("quad", {Dims(1, 0, 0), Rational(4)});
  EXPECT_EQ(unit_to_spec("quad^(1/2)", t).factor, 2);
  EXPECT_THROW(unit_to_spec("yard^(1/2)", t), MalformedUnit);
}

TEST(UnitToSpec, Errors) {
  const UnitTable& t = default_unit_table();
  try {
    unit_to_spec("furlong", t);
    FAIL();
  } catch (const UnknownUnit& e) {
    EXPECT_EQ(e.symbol(), "furlong");
  }
  EXPECT_THROW(unit_to_spec("m *", t), MalformedUnit);
  EXPECT_THROW(unit_to_spec("m^(1/0)", t), MalformedUnit);
  EXPECT_THROW(unit_to_spec("(m", t), MalformedUnit);
}

UnitTable temperature_table() {
  return load_unit_overlay(
      "K = 1\n"
      "degC = 1 offset 273.15\n"
      "degF = 1 factor 5/9 offset 45967/180\n",
      default_unit_table());
}

TEST(UnitToSpec, AffineUnitsDoNotCompose) {
  UnitTable t = temperature_table();
  EXPECT_EQ(unit_to_spec("degC", t).offset, Rational(27315, 100));
  EXPECT_THROW(unit_to_spec("degC * m", t), AffineComposition);
  EXPECT_THROW(unit_to_spec("degF^2", t), AffineComposition);
  EXPECT_THROW(unit_to_spec("1 / degC", t), AffineComposition);
}

TEST(Conversion, LinearExamples) {
  const UnitTable& t = default_unit_table();
  auto m = unit_to_spec("m", t);
  auto yard = unit_to_spec("yard", t);
  EXPECT_EQ(conversion_factor(m, m), (Conversion{1, 0}));
  EXPECT_EQ(conversion_factor(yard, m).scale, Rational(9144, 10000));
  EXPECT_EQ(conversion_factor(unit_to_spec("mile", t), unit_to_spec("foot", t))
                .scale,
            5280);
  EXPECT_THROW(conversion_factor(yard, unit_to_spec("kg", t)), Incommensurable);
}

TEST(Conversion, RoundTripIsOne) {
  const UnitTable& t = default_unit_table();
  const char* exprs[] = {"m", "yard", "foot", "mile", "mile/s", "foot/s"};
  for (const char* a : exprs) {
    for (const char* b : exprs) {
      auto sa = unit_to_spec(a, t), sb = unit_to_spec(b, t);
      if (!(sa.dims == sb.dims)) continue;
      EXPECT_EQ(conversion_factor(sa, sb).scale * conversion_factor(sb, sa).scale,
                1)
          << a << " " << b;
    }
  }
}

TEST(Conversion, CelsiusToFahrenheit) {
  UnitTable t = temperature_table();
  auto c = unit_to_spec("degC", t);
  auto f = unit_to_spec("degF", t);
  // 100 C boils at 212 F; -40 is the same on both scales.
  Conversion cf = conversion_factor(c, f);
  EXPECT_EQ(cf.scale, Rational(9, 5));
  EXPECT_EQ(cf.offset, 32);
  EXPECT_EQ(cf.scale * 100 + cf.offset, 212);
  Conversion fc = conversion_factor(f, c);
  EXPECT_EQ(fc.scale * -40 + fc.offset, -40);
}

TEST(Overlay, LaterDefinitionsShadow) {
  UnitTable t = load_unit_overlay(
      "# comment line\n"
      "furlong = yard factor 220  -- 220 yards\n"
      "\n"
      "furlong = m\n"
      "fps = foot/s\n",
      default_unit_table());
  EXPECT_EQ(unit_to_spec("furlong", t), (UnitSpec{Dims(1, 0, 0)}));
  EXPECT_EQ(unit_to_spec("fps", t).factor, kInch * 12);
}

TEST(Overlay, FactorMultipliesExpression) {
  UnitTable t = load_unit_overlay("furlong = yard factor 220\n",
                                  default_unit_table());
  EXPECT_EQ(unit_to_spec("furlong", t).factor, kInch * 36 * 220);
}

TEST(Overlay, ErrorsCarryLineNumber) {
  try {
    load_unit_overlay("ok = m\nbad = parsec\n", default_unit_table());
    FAIL();
  } catch (const OverlayError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(load_unit_overlay("zero = m factor 0\n", default_unit_table()),
               OverlayError);
  EXPECT_THROW(load_unit_overlay("= m\n", default_unit_table()), OverlayError);
}

TEST(RationalText, ParseAndRender) {
  EXPECT_EQ(*parse_rational("0.5"), Rational(1, 2));
  EXPECT_EQ(*parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(*parse_rational("273.15"), Rational(27315, 100));
  EXPECT_EQ(*parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(*parse_rational("010"), 10);
  EXPECT_EQ(*parse_rational("08/09"), Rational(8, 9));
  EXPECT_EQ(*parse_rational("0"), 0);
  EXPECT_FALSE(parse_rational("1/0").has_value());
  EXPECT_FALSE(parse_rational("x").has_value());
  EXPECT_EQ(to_decimal_string(Rational(9144, 10000)), "0.9144");
  EXPECT_EQ(to_decimal_string(Rational(1, 3)), "1/3");
  EXPECT_EQ(to_decimal_string(Rational(-1, 8)), "-0.125");
}

}  // namespace
}  // namespace quantlint

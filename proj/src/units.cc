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

#include "quantlint/units.h"

#include <fmt/format.h>

#include <cctype>
#include <optional>
#include <sstream>

namespace quantlint {

UnknownUnit::UnknownUnit(std::string symbol)
    : UnitError(fmt::format("unknown unit `{}`", symbol)),
      symbol_(std::move(symbol)) {}

AffineComposition::AffineComposition(std::string symbol)
    : UnitError(fmt::format(
          "affine unit `{}` cannot be raised to a power or combined", symbol)),
      symbol_(std::move(symbol)) {}

MalformedUnit::MalformedUnit(std::string_view text, std::string_view why)
    : UnitError(fmt::format("malformed unit expression `{}`: {}", text, why)) {}

Incommensurable::Incommensurable(const UnitSpec& from, const UnitSpec& to)
    : std::runtime_error(fmt::format("cannot convert {} to {}",
                                     to_string(from.dims),
                                     to_string(to.dims))) {}

OverlayError::OverlayError(int line, const std::string& what)
    : std::runtime_error(fmt::format("line {}: {}", line, what)), line_(line) {}

void UnitTable::define(std::string symbol, UnitSpec spec) {
  if (spec.factor <= 0) {
    throw UnitError(fmt::format("unit `{}` needs a positive factor", symbol));
  }
  units_.insert_or_assign(std::move(symbol), std::move(spec));
}

const UnitSpec* UnitTable::find(std::string_view symbol) const {
  auto it = units_.find(symbol);
  return it == units_.end() ? nullptr : &it->second;
}

std::vector<std::string> UnitTable::symbols() const {
  std::vector<std::string> out;
  out.reserve(units_.size());
  for (const auto& [sym, spec] : units_) out.push_back(sym);
  return out;
}

const UnitTable& default_unit_table() {
  static const UnitTable table = [] {
    UnitTable t;
    t.define("m", {Dims(1, 0, 0)});
    t.define("kg", {Dims(0, 1, 0)});
    t.define("s", {Dims(0, 0, 1)});
    t.define("Hz", {Dims(0, 0, -1)});
    t.define("N", {Dims(1, 1, -2)});
    t.define("Pa", {Dims(-1, 1, -2)});
    t.define("J", {Dims(2, 1, -2)});
    t.define("W", {Dims(2, 1, -3)});
    // International yard (1959): exactly 0.9144 m.
    const Rational yard(9144, 10000);
    t.define("yard", {Dims(1, 0, 0), yard});
    t.define("foot", {Dims(1, 0, 0), yard / 3});
    t.define("mile", {Dims(1, 0, 0), yard * 1760});
    return t;
  }();
  return table;
}

namespace {

// Recursive descent over the unit-expression text:
//   expr := power (('*' | '/') power)*
//   power := atom ('^' exponent)?
//   atom := symbol | '1' | '(' expr ')'
//   exponent := ['-'|'+'] digits | '(' ['-'|'+'] digits ['/' digits] ')'
class UnitParser {
 public:
  UnitParser(std::string_view text, const UnitTable& table)
      : text_(text), table_(table) {}

  UnitSpec parse() {
    skip_space();
    if (at_end()) throw MalformedUnit(text_, "empty");
    Term t = expr();
    skip_space();
    if (!at_end()) {
      throw MalformedUnit(text_, fmt::format("unexpected `{}`", text_[pos_]));
    }
    if (t.affine_symbol && t.composed) throw AffineComposition(*t.affine_symbol);
    return t.spec;
  }

 private:
  struct Term {
    UnitSpec spec;
    std::optional<std::string> affine_symbol;
    bool composed = false;
  };

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  static Term combine(Term lhs, const Term& rhs, bool divide) {
    Term out;
    out.spec.dims = divide ? dim_div(lhs.spec.dims, rhs.spec.dims)
                           : dim_mul(lhs.spec.dims, rhs.spec.dims);
    out.spec.factor = divide ? Rational(lhs.spec.factor / rhs.spec.factor)
                             : Rational(lhs.spec.factor * rhs.spec.factor);
    out.affine_symbol = lhs.affine_symbol ? lhs.affine_symbol : rhs.affine_symbol;
    out.composed = true;
    return out;
  }

  Term expr() {
    Term acc = power();
    for (;;) {
      if (eat('*')) {
        acc = combine(std::move(acc), power(), false);
      } else if (eat('/')) {
        acc = combine(std::move(acc), power(), true);
      } else {
        return acc;
      }
    }
  }

  Term power() {
    Term base = atom();
    if (!eat('^')) return base;
    Rational e = exponent();
    if (base.affine_symbol) throw AffineComposition(*base.affine_symbol);
    Term out;
    out.spec.dims = base.spec.dims.scaled(e);
    out.spec.factor = raise(base.spec.factor, e);
    out.composed = true;
    return out;
  }

  Rational raise(const Rational& factor, const Rational& e) const {
    auto num = boost::multiprecision::numerator(e);
    auto den = boost::multiprecision::denominator(e);
    auto root = exact_root(factor, den.convert_to<long>());
    if (!root) {
      throw MalformedUnit(text_, "conversion factor has no exact rational root");
    }
    return pow(*root, num.convert_to<long>());
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    if (out.empty()) throw MalformedUnit(text_, "expected an integer exponent");
    if (out.size() > 9) throw MalformedUnit(text_, "exponent out of range");
    return out;
  }

  Rational signed_integer() {
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    Rational r = *parse_rational(digits());
    return negative ? Rational(-r) : r;
  }

  Rational exponent() {
    if (!eat('(')) return signed_integer();
    Rational r = signed_integer();
    if (eat('/')) {
      skip_space();
      Rational den = *parse_rational(digits());
      if (den == 0) throw MalformedUnit(text_, "zero denominator in exponent");
      r /= den;
    }
    if (!eat(')')) throw MalformedUnit(text_, "expected `)`");
    return r;
  }

  Term atom() {
    skip_space();
    if (eat('(')) {
      Term inner = expr();
      if (!eat(')')) throw MalformedUnit(text_, "expected `)`");
      return inner;
    }
    if (peek() == '1') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        throw MalformedUnit(text_, "only `1` may appear as a number");
      }
      return Term{};
    }
    std::string symbol;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_')) {
      symbol += text_[pos_++];
    }
    if (symbol.empty() || std::isdigit(static_cast<unsigned char>(symbol[0]))) {
      throw MalformedUnit(text_, "expected a unit symbol");
    }
    const UnitSpec* spec = table_.find(symbol);
    if (spec == nullptr) throw UnknownUnit(symbol);
    Term t;
    t.spec = *spec;
    if (spec->is_affine()) t.affine_symbol = symbol;
    return t;
  }

  std::string_view text_;
  const UnitTable& table_;
  std::size_t pos_ = 0;
};

}  // namespace

UnitSpec unit_to_spec(std::string_view expr, const UnitTable& table) {
  return UnitParser(expr, table).parse();
}

Conversion conversion_factor(const UnitSpec& from, const UnitSpec& to) {
  if (from.dims != to.dims) throw Incommensurable(from, to);
  // si = f_from * v + o_from ;  v_to = (si - o_to) / f_to
  return Conversion{from.factor / to.factor,
                    (from.offset - to.offset) / to.factor};
}

UnitTable load_unit_overlay(std::string_view text, UnitTable base) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    for (std::string_view marker : {"#", "--"}) {
      if (auto c = line.find(marker); c != std::string::npos) line.erase(c);
    }
    auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos) throw OverlayError(lineno, "expected `=`");

    std::istringstream lhs(line.substr(0, eq));
    std::string symbol;
    std::string extra;
    lhs >> symbol;
    if (symbol.empty() || (lhs >> extra)) {
      throw OverlayError(lineno, "expected a single unit symbol before `=`");
    }
    for (char ch : symbol) {
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
        throw OverlayError(lineno, fmt::format("invalid symbol `{}`", symbol));
      }
    }
    if (std::isdigit(static_cast<unsigned char>(symbol[0]))) {
      throw OverlayError(lineno, fmt::format("invalid symbol `{}`", symbol));
    }

    // Split the right-hand side into the expression and trailing keywords.
    std::istringstream rhs(line.substr(eq + 1));
    std::vector<std::string> words;
    for (std::string w; rhs >> w;) words.push_back(w);
    std::string unit_expr;
    std::optional<Rational> factor;
    std::optional<Rational> offset;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i] == "factor" || words[i] == "offset") {
        if (i + 1 >= words.size()) {
          throw OverlayError(lineno, fmt::format("`{}` needs a value", words[i]));
        }
        auto value = parse_rational(words[i + 1]);
        if (!value) {
          throw OverlayError(lineno,
                             fmt::format("bad rational `{}`", words[i + 1]));
        }
        (words[i] == "factor" ? factor : offset) = *value;
        ++i;
        continue;
      }
      if (factor || offset) {
        throw OverlayError(lineno, "unit expression must precede factor/offset");
      }
      if (!unit_expr.empty()) unit_expr += ' ';
      unit_expr += words[i];
    }
    if (unit_expr.empty()) throw OverlayError(lineno, "missing unit expression");

    try {
      UnitSpec spec = unit_to_spec(unit_expr, base);
      if (factor) spec.factor *= *factor;
      if (offset) spec.offset = *offset;
      base.define(symbol, std::move(spec));
    } catch (const UnitError& e) {
      throw OverlayError(lineno, e.what());
    }
  }
  return base;
}

}  // namespace quantlint

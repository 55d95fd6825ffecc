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

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace quantlint {

// The kind of quantity attached to a value: a named entity such as torque,
// no name at all, or (inside generic function signatures only) a quantity
// variable that is resolved per call site.
class QuantName {
 public:
  enum class Kind { kNoname, kNamed, kQuantvar };

  QuantName() = default;

  static QuantName named(std::string name);
  static QuantName noname() { return QuantName(); }
  static QuantName quantvar(std::string id);

  Kind kind() const { return kind_; }
  bool is_named() const { return kind_ == Kind::kNamed; }
  bool is_noname() const { return kind_ == Kind::kNoname; }
  bool is_quantvar() const { return kind_ == Kind::kQuantvar; }

  // The entity name for kNamed, the variable id for kQuantvar, empty otherwise.
  const std::string& text() const { return text_; }

  friend bool operator==(const QuantName&, const QuantName&) = default;
  friend auto operator<=>(const QuantName&, const QuantName&) = default;

 private:
  QuantName(Kind kind, std::string text) : kind_(kind), text_(std::move(text)) {}

  Kind kind_ = Kind::kNoname;
  std::string text_;
};

// `Named "T"`, `Noname`, `?q`.
std::string to_string(const QuantName& q);

// τ: unit variable -> quantity name. Plain value; updates copy.
using QuantEnv = std::map<std::string, QuantName>;

// Two named operands that refer to different entities.
class QuantityMismatch : public std::runtime_error {
 public:
  QuantityMismatch(QuantName lhs, QuantName rhs);

  const QuantName& lhs() const { return lhs_; }
  const QuantName& rhs() const { return rhs_; }

 private:
  QuantName lhs_;
  QuantName rhs_;
};

// A Quantvar reached ◊ or △. Quantity variables are substituted at call
// sites, so this is always a checker bug rather than a user error.
class UnresolvedQuantvar : public std::logic_error {
 public:
  explicit UnresolvedQuantvar(const QuantName& q);
};

// Addition compatibility. Named n ◊ Named n = Named n, a Noname side is cast
// up to the other side's name, Noname ◊ Noname = Noname. Throws
// QuantityMismatch for two different names.
QuantName diamond(const QuantName& a, const QuantName& b);

// diamond without the exception: nullopt where diamond would throw
// QuantityMismatch.
std::optional<QuantName> try_diamond(const QuantName& a, const QuantName& b);

// Multiplication always loses the entity: the result is Noname.
QuantName triangle(const QuantName& a, const QuantName& b);

struct AssignSucceed {
  QuantEnv env;
};

struct AssignFail {
  std::string target;
  QuantName lhs;
  QuantName rhs;
};

struct AssignResult {
  std::variant<AssignSucceed, AssignFail> outcome;

  bool succeeded() const {
    return std::holds_alternative<AssignSucceed>(outcome);
  }
  const QuantEnv& env() const { return std::get<AssignSucceed>(outcome).env; }
  const AssignFail& failure() const { return std::get<AssignFail>(outcome); }
};

// The ⊴ operator: checks `target := <rhs>` where `lhs` is target's current
// binding. A Noname target takes on the assigned name, in which case the
// returned environment has `target` overridden.
AssignResult assign_op(const std::string& target, const QuantName& lhs,
                       const QuantName& rhs, const QuantEnv& env);

}  // namespace quantlint

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

#include "quantlint/quantity.h"

#include <fmt/format.h>

namespace quantlint {

QuantName QuantName::named(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty quantity name");
  return QuantName(Kind::kNamed, std::move(name));
}

QuantName QuantName::quantvar(std::string id) {
  if (id.empty()) throw std::invalid_argument("empty quantity variable");
  return QuantName(Kind::kQuantvar, std::move(id));
}

std::string to_string(const QuantName& q) {
  switch (q.kind()) {
    case QuantName::Kind::kNoname:
      return "Noname";
    case QuantName::Kind::kNamed:
      return fmt::format("Named \"{}\"", q.text());
    case QuantName::Kind::kQuantvar:
      return "?" + q.text();
  }
  return "?";
}

QuantityMismatch::QuantityMismatch(QuantName lhs, QuantName rhs)
    : std::runtime_error(fmt::format("cannot combine {} with {}",
                                     to_string(lhs), to_string(rhs))),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

UnresolvedQuantvar::UnresolvedQuantvar(const QuantName& q)
    : std::logic_error(
          fmt::format("quantity variable {} used outside a call site",
                      to_string(q))) {}

namespace {

void require_resolved(const QuantName& a, const QuantName& b) {
  if (a.is_quantvar()) throw UnresolvedQuantvar(a);
  if (b.is_quantvar()) throw UnresolvedQuantvar(b);
}

}  // namespace

std::optional<QuantName> try_diamond(const QuantName& a, const QuantName& b) {
  require_resolved(a, b);
  if (a.is_named() && b.is_named()) {
    if (a.text() != b.text()) return std::nullopt;
    return a;
  }
  if (a.is_named()) return a;
  return b;
}

QuantName diamond(const QuantName& a, const QuantName& b) {
  std::optional<QuantName> r = try_diamond(a, b);
  if (!r) throw QuantityMismatch(a, b);
  return *std::move(r);
}

QuantName triangle(const QuantName& a, const QuantName& b) {
  require_resolved(a, b);
  return QuantName::noname();
}

AssignResult assign_op(const std::string& target, const QuantName& lhs,
                       const QuantName& rhs, const QuantEnv& env) {
  require_resolved(lhs, rhs);
  if (lhs.is_named() && rhs.is_named() && lhs.text() != rhs.text()) {
    return {AssignFail{target, lhs, rhs}};
  }
  if (lhs.is_noname() && rhs.is_named()) {
    QuantEnv updated = env;
    updated[target] = rhs;
    return {AssignSucceed{std::move(updated)}};
  }
  return {AssignSucceed{env}};
}

}  // namespace quantlint

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

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "quantlint/quantity.h"
#include "quantlint/rational.h"

namespace quantlint {

struct Position {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in bytes
  std::size_t offset = 0;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

// Half-open source range [begin, end).
struct Span {
  Position begin;
  Position end;

  bool contains(const Span& inner) const {
    return begin.offset <= inner.begin.offset && inner.end.offset <= end.offset;
  }

  friend bool operator==(const Span&, const Span&) = default;
};

struct Expr {
  enum class Kind { kVar, kAdd, kSub, kScalarMul, kMul, kDiv, kCall };

  Kind kind = Kind::kVar;
  std::string name;            // variable for kVar, function for kCall
  Rational scalar;             // kScalarMul only
  std::vector<Expr> operands;  // 2 for binary nodes, 1 for kScalarMul, args for kCall
  Span span;

  static Expr var(std::string name, Span span = {});
  static Expr binary(Kind kind, Expr lhs, Expr rhs, Span span = {});
  static Expr scale(Rational r, Expr operand, Span span = {});
  static Expr call(std::string fn, std::vector<Expr> args, Span span = {});

  bool is_binary() const {
    return kind == Kind::kAdd || kind == Kind::kSub || kind == Kind::kMul ||
           kind == Kind::kDiv;
  }
  const Expr& lhs() const { return operands.at(0); }
  const Expr& rhs() const { return operands.at(1); }
};

struct Comparison {
  enum class Op { kLess, kLessEq, kEq, kGreaterEq, kGreater };

  Op op = Op::kLess;
  Expr lhs;
  Expr rhs;
  Span span;
};

struct Statement {
  enum class Kind { kAssign, kIf };

  Kind kind = Kind::kAssign;
  // kAssign
  std::string target;
  Span target_span;
  Expr value;
  // kIf
  Comparison condition;
  std::vector<Statement> then_branch;
  std::vector<Statement> else_branch;

  Span span;

  static Statement assign(std::string target, Expr value, Span span = {});
  static Statement branch(Comparison condition, std::vector<Statement> then_branch,
                          std::vector<Statement> else_branch, Span span = {});
};

// `uv : float of <unit> [named Q | named ?q]`. Used for variables, function
// parameters and (without a name) function results.
struct Declaration {
  std::string var;
  std::string unit;  // canonical unit-expression text
  QuantName quant;
  Span span;
  Span unit_span;
};

struct FunctionDecl {
  std::string name;
  std::vector<Declaration> params;
  std::string return_unit;
  QuantName return_quant;
  Expr body;
  Span span;
  Span return_span;
};

using TopLevelDecl = std::variant<Declaration, FunctionDecl>;

struct Comment {
  int line = 0;
  std::string text;  // without the leading `--`
};

struct Program {
  std::vector<TopLevelDecl> decls;
  std::vector<Statement> stmts;
  std::vector<Comment> comments;
  Span span;
};

// Structural equality that ignores spans and comments.
bool same_structure(const Expr& a, const Expr& b);
bool same_structure(const Comparison& a, const Comparison& b);
bool same_structure(const Statement& a, const Statement& b);
bool same_structure(const Declaration& a, const Declaration& b);
bool same_structure(const FunctionDecl& a, const FunctionDecl& b);
bool same_structure(const Program& a, const Program& b);

std::string_view to_string(Comparison::Op op);

// Declarations of each sort, in source order.
std::vector<Declaration> variable_decls(const Program& p);
std::vector<FunctionDecl> function_decls(const Program& p);

}  // namespace quantlint

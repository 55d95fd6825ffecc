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

#include "quantlint/ast.h"

#include <algorithm>

namespace quantlint {

Expr Expr::var(std::string name, Span span) {
  Expr e;
  e.kind = Kind::kVar;
  e.name = std::move(name);
  e.span = span;
  return e;
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs, Span span) {
  Expr e;
  e.kind = kind;
  e.operands.reserve(2);
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  e.span = span;
  return e;
}

Expr Expr::scale(Rational r, Expr operand, Span span) {
  Expr e;
  e.kind = Kind::kScalarMul;
  e.scalar = std::move(r);
  e.operands.push_back(std::move(operand));
  e.span = span;
  return e;
}

Expr Expr::call(std::string fn, std::vector<Expr> args, Span span) {
  Expr e;
  e.kind = Kind::kCall;
  e.name = std::move(fn);
  e.operands = std::move(args);
  e.span = span;
  return e;
}

Statement Statement::assign(std::string target, Expr value, Span span) {
  Statement s;
  s.kind = Kind::kAssign;
  s.target = std::move(target);
  s.value = std::move(value);
  s.span = span;
  return s;
}

Statement Statement::branch(Comparison condition,
                            std::vector<Statement> then_branch,
                            std::vector<Statement> else_branch, Span span) {
  Statement s;
  s.kind = Kind::kIf;
  s.condition = std::move(condition);
  s.then_branch = std::move(then_branch);
  s.else_branch = std::move(else_branch);
  s.span = span;
  return s;
}

namespace {

template <typename T>
bool same_list(const std::vector<T>& a, const std::vector<T>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const T& x, const T& y) { return same_structure(x, y); });
}

}  // namespace

bool same_structure(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  if (a.kind == Expr::Kind::kScalarMul && a.scalar != b.scalar) return false;
  return same_list(a.operands, b.operands);
}

bool same_structure(const Comparison& a, const Comparison& b) {
  return a.op == b.op && same_structure(a.lhs, b.lhs) &&
         same_structure(a.rhs, b.rhs);
}

bool same_structure(const Statement& a, const Statement& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Statement::Kind::kAssign) {
    return a.target == b.target && same_structure(a.value, b.value);
  }
  return same_structure(a.condition, b.condition) &&
         same_list(a.then_branch, b.then_branch) &&
         same_list(a.else_branch, b.else_branch);
}

bool same_structure(const Declaration& a, const Declaration& b) {
  return a.var == b.var && a.unit == b.unit && a.quant == b.quant;
}

bool same_structure(const FunctionDecl& a, const FunctionDecl& b) {
  return a.name == b.name && same_list(a.params, b.params) &&
         a.return_unit == b.return_unit && a.return_quant == b.return_quant &&
         same_structure(a.body, b.body);
}

bool same_structure(const Program& a, const Program& b) {
  auto same_decl = [](const TopLevelDecl& x, const TopLevelDecl& y) {
    if (x.index() != y.index()) return false;
    return std::visit(
        [&](const auto& lhs) {
          using T = std::decay_t<decltype(lhs)>;
          return same_structure(lhs, std::get<T>(y));
        },
        x);
  };
  return std::equal(a.decls.begin(), a.decls.end(), b.decls.begin(),
                    b.decls.end(), same_decl) &&
         same_list(a.stmts, b.stmts);
}

std::string_view to_string(Comparison::Op op) {
  switch (op) {
    case Comparison::Op::kLess:
      return "<";
    case Comparison::Op::kLessEq:
      return "<=";
    case Comparison::Op::kEq:
      return "=";
    case Comparison::Op::kGreaterEq:
      return ">=";
    case Comparison::Op::kGreater:
      return ">";
  }
  return "?";
}

std::vector<Declaration> variable_decls(const Program& p) {
  std::vector<Declaration> out;
  for (const auto& d : p.decls) {
    if (const auto* v = std::get_if<Declaration>(&d)) out.push_back(*v);
  }
  return out;
}

std::vector<FunctionDecl> function_decls(const Program& p) {
  std::vector<FunctionDecl> out;
  for (const auto& d : p.decls) {
    if (const auto* f = std::get_if<FunctionDecl>(&d)) out.push_back(*f);
  }
  return out;
}

}  // namespace quantlint

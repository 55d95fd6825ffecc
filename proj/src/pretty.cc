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

#include "quantlint/pretty.h"

#include <fmt/format.h>

namespace quantlint {

namespace {

enum Precedence { kSum = 0, kProduct = 1, kOperand = 2 };

std::string wrap(std::string s, bool parens) {
  return parens ? "(" + s + ")" : s;
}

std::string print(const Expr& e, int context) {
  switch (e.kind) {
    case Expr::Kind::kVar:
      return e.name;
    case Expr::Kind::kCall: {
      std::string args;
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i > 0) args += ", ";
        args += print(e.operands[i], kSum);
      }
      return fmt::format("{}({})", e.name, args);
    }
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub: {
      const char* op = e.kind == Expr::Kind::kAdd ? " + " : " - ";
      return wrap(print(e.lhs(), kSum) + op + print(e.rhs(), kProduct),
                  context > kSum);
    }
    case Expr::Kind::kMul:
    case Expr::Kind::kDiv: {
      const char* op = e.kind == Expr::Kind::kMul ? " * " : " / ";
      const Expr& rhs = e.rhs();
      std::string right = print(rhs, kOperand);
      if (rhs.kind == Expr::Kind::kScalarMul) right = wrap(right, true);
      return wrap(print(e.lhs(), kProduct) + op + right, context > kProduct);
    }
    case Expr::Kind::kScalarMul:
      return to_decimal_string(e.scalar) + " * " +
             print(e.operands.at(0), kOperand);
  }
  return "?";
}

std::string quant_suffix(const QuantName& q) {
  switch (q.kind()) {
    case QuantName::Kind::kNoname:
      return "";
    case QuantName::Kind::kNamed:
      return " named " + q.text();
    case QuantName::Kind::kQuantvar:
      return " named ?" + q.text();
  }
  return "";
}

void print_statements(const std::vector<Statement>& stmts, int indent,
                      std::string& out) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (std::size_t i = 0; i < stmts.size(); ++i) {
    const Statement& s = stmts[i];
    if (s.kind == Statement::Kind::kAssign) {
      out += fmt::format("{}{} := {}", pad, s.target, print(s.value, kSum));
    } else {
      out += fmt::format("{}if {} {} {} then\n", pad,
                         print(s.condition.lhs, kSum), to_string(s.condition.op),
                         print(s.condition.rhs, kSum));
      print_statements(s.then_branch, indent + 1, out);
      out += pad + "else\n";
      print_statements(s.else_branch, indent + 1, out);
      out += pad + "end";
    }
    out += (i + 1 < stmts.size()) ? ";\n" : "\n";
  }
}

}  // namespace

std::string pretty(const Expr& e) { return print(e, kSum); }

std::string pretty(const Declaration& d) {
  return fmt::format("{} : float of {}{}", d.var, d.unit, quant_suffix(d.quant));
}

std::string pretty(const FunctionDecl& f) {
  std::string params;
  for (std::size_t i = 0; i < f.params.size(); ++i) {
    if (i > 0) params += ", ";
    params += pretty(f.params[i]);
  }
  return fmt::format("fun {}({}) : float of {}{} is {}", f.name, params,
                     f.return_unit, quant_suffix(f.return_quant),
                     print(f.body, kSum));
}

std::string pretty(const Program& p) {
  std::string out = "begin\n";
  for (std::size_t i = 0; i < p.decls.size(); ++i) {
    out += "  ";
    out += std::visit([](const auto& d) { return pretty(d); }, p.decls[i]);
    out += (i + 1 < p.decls.size()) ? ";\n" : "\n";
  }
  out += "in\n";
  print_statements(p.stmts, 1, out);
  out += "end\n";
  return out;
}

}  // namespace quantlint

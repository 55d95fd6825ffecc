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
#include <utility>
#include <variant>
#include <vector>

#include "quantlint/ast.h"
#include "quantlint/diagnostic.h"
#include "quantlint/quantity.h"

namespace quantlint {

// σ: function name -> declaration (parameters with their names, body and
// declared result).
using FunEnv = std::map<std::string, FunctionDecl>;

// A failed named-quantity derivation at a source span.
class QuantError : public std::runtime_error {
 public:
  QuantError(std::string code, Span span, std::string message,
             int koq_type = 0);

  const std::string& code() const { return code_; }
  const Span& span() const { return span_; }
  int koq_type() const { return koq_type_; }

  std::vector<std::pair<std::string, std::string>> related;

  Diagnostic to_diagnostic() const;

 private:
  std::string code_;
  Span span_;
  int koq_type_;
};

// Raised when two different names reach the same quantity variable.
class UnifyFail : public std::runtime_error {
 public:
  UnifyFail(std::string quantvar, QuantName first, QuantName second);

  const std::string& quantvar() const { return quantvar_; }
  const QuantName& first() const { return first_; }
  const QuantName& second() const { return second_; }

 private:
  std::string quantvar_;
  QuantName first_;
  QuantName second_;
};

// Quantity variable id -> resolved name.
using Substitution = std::map<std::string, QuantName>;

// Resolves the quantity variables of `sig` from the names of the actual
// arguments. Parameters sharing a variable are merged with union-find and
// their argument names combined with ◊; a class that sees no name resolves to
// Noname.
Substitution unify_quantvars(const FunctionDecl& sig,
                             const std::vector<QuantName>& arg_names);

// `sig` with every Quantvar annotation replaced under `subst`.
FunctionDecl instantiate(const FunctionDecl& sig, const Substitution& subst);

QuantName infer_quant(const Expr& e, const QuantEnv& env, const FunEnv& funs);

// infer_quant reporting failure as a value instead of throwing it.
using QuantInference = std::variant<QuantName, QuantError>;
QuantInference try_infer_quant(const Expr& e, const QuantEnv& env,
                               const FunEnv& funs);

// Name of a call expression: binds arguments to parameters with ⊴ against an
// empty environment, infers the body under the resulting bindings and casts
// the body's name to the declared result with ◊.
QuantName invoke_function(const Expr& call, const QuantEnv& env,
                          const FunEnv& funs);

// `uv := e` as (τ uv) ⊴ name(e). Inference failures propagate as QuantError.
AssignResult check_assignment(const Statement& s, const QuantEnv& env,
                              const FunEnv& funs);

struct QuantVerdict {
  bool succeeded = true;
  // Final τ. On failure, τ as it stood before the failing statement.
  QuantEnv env;
  // Errors and notes, in the order they were found.
  std::vector<Diagnostic> diagnostics;
};

// Threads τ through the statements; stops at the first failing one.
QuantVerdict check_quant_stmts(const std::vector<Statement>& stmts,
                               const QuantEnv& env, const FunEnv& funs);

// τ from the variable declarations.
QuantEnv initial_quant_env(const Program& p);

struct FunEnvResult {
  FunEnv funs;
  std::vector<Diagnostic> diagnostics;
};

// σ from the function declarations, checking each body once against its
// declared result. A body may call only functions declared before it.
FunEnvResult build_fun_env(const Program& p);

// Assumes the program is dimensionally valid.
QuantVerdict check_quant_program(const Program& p);

}  // namespace quantlint

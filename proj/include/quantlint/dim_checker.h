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
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "quantlint/ast.h"
#include "quantlint/diagnostic.h"
#include "quantlint/dims.h"
#include "quantlint/units.h"

namespace quantlint {

// ρ: variable -> unit. The checker's rules only look at `dims`; the factor is
// kept so commensurable-but-different units can be reported as conversions.
using DimEnv = std::map<std::string, UnitSpec>;

struct DimSignature {
  std::vector<std::pair<std::string, UnitSpec>> params;
  UnitSpec result;
};

using DimFunEnv = std::map<std::string, DimSignature>;

// Failure inside the dimensional pass, attached to a source span.
class DimError : public std::runtime_error {
 public:
  DimError(std::string code, Span span, std::string message,
           std::string subject = {});

  const std::string& code() const { return code_; }
  const Span& span() const { return span_; }
  // The variable, function or unit symbol the error is about, if any.
  const std::string& subject() const { return subject_; }

  std::optional<Dims> expected;
  std::optional<Dims> found;

  Diagnostic to_diagnostic() const;

 private:
  std::string code_;
  Span span_;
  std::string subject_;
};

// Left-to-right fold over declarations. Throws DimError with code
// UNKNOWN-UNIT, AFFINE-COMPOSITION, MALFORMED-UNIT or DUPLICATE-DECL.
DimEnv build_dim_env(const std::vector<Declaration>& decls,
                     const UnitTable& table = default_unit_table());

// Dimensions of a unit expression. Throws DimError (DIM-MISMATCH,
// UNBOUND-VAR, UNKNOWN-FUNCTION, ARITY). When `notes` is given, unit
// conversions the expression would need are appended to it.
Dims infer_dims(const Expr& e, const DimEnv& env, const DimFunEnv& funs = {},
                std::vector<Diagnostic>* notes = nullptr);

// infer_dims reporting failure as a value instead of throwing it.
std::variant<Dims, DimError> try_infer_dims(
    const Expr& e, const DimEnv& env, const DimFunEnv& funs = {},
    std::vector<Diagnostic>* notes = nullptr);

struct DimVerdict {
  // Errors only; DimValid iff empty.
  std::vector<Diagnostic> diagnostics;
  // Informational conversion notes.
  std::vector<Diagnostic> notes;
  DimEnv env;
  DimFunEnv functions;

  bool valid() const { return diagnostics.empty(); }
};

// Checks declarations, function bodies and every statement, collecting all
// failures rather than stopping at the first.
DimVerdict check_dims_program(const Program& p,
                              const UnitTable& table = default_unit_table());

}  // namespace quantlint

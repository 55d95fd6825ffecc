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

#include <string>
#include <vector>

#include "quantlint/ast.h"
#include "quantlint/diagnostic.h"

namespace quantlint {

inline constexpr std::string_view kRuleMultiplication = "DISC-MUL";
inline constexpr std::string_view kRuleNonameAssign = "DISC-NONAME-ASSIGN";

struct LintWarning {
  Span span;
  std::string rule;
  std::string message;
  Severity severity = Severity::kWarning;

  Diagnostic to_diagnostic() const;
};

struct LintOptions {
  // Report violations as errors.
  bool strict = false;
};

// Checks that general multiplication only happens inside functions with a
// Named result, and flags assignments of a Noname value to a Named variable.
// A `-- quantlint: allow RULE` comment silences RULE on the following line.
std::vector<LintWarning> lint_discipline(const Program& p,
                                         const LintOptions& options = {});

}  // namespace quantlint

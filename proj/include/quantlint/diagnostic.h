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
#include <string_view>
#include <utility>
#include <vector>

#include "quantlint/ast.h"

namespace quantlint {

enum class Phase { kParse, kDims, kQuant, kLint };
enum class Severity { kError, kWarning, kNote };

std::string_view to_string(Phase p);
std::string_view to_string(Severity s);

// One finding of any pass. `related` carries the names or dimension vectors
// involved, as ordered key/value pairs (`expected` -> `(2,1,-2)`).
struct Diagnostic {
  Phase phase = Phase::kParse;
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  Span span;
  std::vector<std::pair<std::string, std::string>> related;
  // 1 or 2 when the finding is a kind-of-quantity error of that type.
  int koq_type = 0;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

}  // namespace quantlint

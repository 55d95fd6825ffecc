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

#include "quantlint/diagnostic.h"

namespace quantlint {

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::kParse:
      return "parse";
    case Phase::kDims:
      return "dims";
    case Phase::kQuant:
      return "quant";
    case Phase::kLint:
      return "lint";
  }
  return "?";
}

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::kError:
      return "error";
    case Severity::kWarning:
      return "warning";
    case Severity::kNote:
      return "note";
  }
  return "?";
}

}  // namespace quantlint

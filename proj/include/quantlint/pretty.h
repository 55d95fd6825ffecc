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

#include "quantlint/ast.h"

namespace quantlint {

// Canonical source form. parse(pretty(p)) is structurally equal to p.
std::string pretty(const Program& p);
std::string pretty(const Expr& e);
std::string pretty(const Declaration& d);
std::string pretty(const FunctionDecl& f);

}  // namespace quantlint

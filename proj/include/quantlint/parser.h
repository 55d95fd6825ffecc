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

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "quantlint/ast.h"

namespace quantlint {

class ParseError : public std::runtime_error {
 public:
  ParseError(Position where, std::set<std::string> expected, std::string found);
  // Semantic errors found while parsing (duplicate names and the like).
  ParseError(Position where, const std::string& message);

  const Position& where() const { return where_; }
  const std::set<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  Position where_;
  std::set<std::string> expected_;
  std::string found_;
};

// Parses a whole `.uq` program. Stops at the first error.
Program parse(std::string_view source);

}  // namespace quantlint

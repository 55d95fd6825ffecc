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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "quantlint/diagnostic.h"
#include "quantlint/units.h"

namespace quantlint {

inline constexpr int kJsonSchemaVersion = 1;

struct CheckOptions {
  bool strict_discipline = false;
  bool dump_env = false;
  const UnitTable* units = &default_unit_table();
};

struct EnvEntry {
  std::string var;
  std::string value;  // dims for ρ, quantity name for τ
  std::string factor;  // ρ only
};

// Everything the CLI reports for one input file.
struct FileReport {
  std::string file;
  bool parsed = false;
  std::string dims = "skipped";   // valid | fail | skipped
  std::string quant = "skipped";  // succeed | fail | skipped
  std::string lint = "skipped";   // clean | warnings | errors | skipped
  // Ordered by (span start, phase).
  std::vector<Diagnostic> diagnostics;
  // Variables promoted from Noname during checking, with their final name.
  std::vector<EnvEntry> promotions;
  bool has_env = false;
  std::vector<EnvEntry> rho;
  std::vector<EnvEntry> tau;
};

// parse -> dims -> quantities -> lint. The quantity pass only runs on
// dimensionally valid programs.
FileReport check_source(std::string file, std::string_view source,
                        const CheckOptions& options = {});

// Reads `path` first; unreadable files become a parse-phase IO-ERROR.
FileReport check_file(const std::filesystem::path& path,
                      const CheckOptions& options = {});

// 0 clean, 1 checking or lint errors, 2 parse or IO errors.
int exit_code(const FileReport& report);
int exit_code(const std::vector<FileReport>& reports);

nlohmann::json to_json(const FileReport& report);

// Human-readable report, produced from the JSON form so both outputs carry
// exactly the same information.
std::string render_text(const nlohmann::json& report);

}  // namespace quantlint

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

#include <fmt/format.h>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quantlint/driver.h"
#include "quantlint/units.h"

int main(int argc, char** argv) {
  CLI::App app{"quantlint: units-of-measure and kind-of-quantity checker"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "check one or more .uq programs");
  bool json = false;
  bool strict = false;
  bool dump_env = false;
  std::string units_file;
  std::vector<std::string> files;
  check->add_flag("--json", json, "one JSON object per file on stdout");
  check->add_flag("--strict-discipline", strict,
                  "report discipline findings as errors");
  check->add_option("--units", units_file, "unit table overlay")
      ->check(CLI::ExistingFile);
  check->add_flag("--dump-env", dump_env, "print the final ρ and τ");
  check->add_option("files", files, "programs to check")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  quantlint::UnitTable table = quantlint::default_unit_table();
  if (!units_file.empty()) {
    std::ifstream in(units_file);
    std::ostringstream text;
    text << in.rdbuf();
    try {
      table = quantlint::load_unit_overlay(text.str(), std::move(table));
    } catch (const quantlint::OverlayError& e) {
      std::cerr << fmt::format("{}:{}\n", units_file, e.what());
      return 2;
    }
  }

  quantlint::CheckOptions options;
  options.strict_discipline = strict;
  options.dump_env = dump_env;
  options.units = &table;

  std::vector<std::future<quantlint::FileReport>> pending;
  pending.reserve(files.size());
  for (const auto& f : files) {
    pending.push_back(std::async(std::launch::async, [&options, f] {
      return quantlint::check_file(f, options);
    }));
  }

  std::vector<quantlint::FileReport> reports;
  for (auto& p : pending) {
    reports.push_back(p.get());
    auto j = quantlint::to_json(reports.back());
    if (json) {
      std::cout << j.dump() << '\n';
    } else {
      std::cout << quantlint::render_text(j);
    }
  }
  return quantlint::exit_code(reports);
}

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

#include "quantlint/driver.h"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "quantlint/dim_checker.h"
#include "quantlint/discipline.h"
#include "quantlint/parser.h"
#include "quantlint/quant_checker.h"

namespace quantlint {

namespace {

void sort_and_dedupe(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     if (a.span.begin != b.span.begin) {
                       return a.span.begin < b.span.begin;
                     }
                     return a.phase < b.phase;
                   });
  diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
}

Diagnostic parse_failure(const ParseError& e) {
  Diagnostic d;
  d.phase = Phase::kParse;
  d.severity = Severity::kError;
  d.code = "PARSE-ERROR";
  std::string msg = e.what();
  // Drop the "line:col: " prefix; the span carries it.
  if (auto colon = msg.find(": "); colon != std::string::npos) {
    msg = msg.substr(colon + 2);
  }
  d.message = msg;
  d.span = {e.where(), e.where()};
  for (const auto& x : e.expected()) d.related.emplace_back("expected", x);
  return d;
}

}  // namespace

FileReport check_source(std::string file, std::string_view source,
                        const CheckOptions& options) {
  FileReport report;
  report.file = std::move(file);

  Program program;
  try {
    program = parse(source);
    report.parsed = true;
  } catch (const ParseError& e) {
    report.diagnostics.push_back(parse_failure(e));
    return report;
  }

  DimVerdict dims = check_dims_program(program, *options.units);
  report.dims = dims.valid() ? "valid" : "fail";
  report.diagnostics.insert(report.diagnostics.end(), dims.diagnostics.begin(),
                            dims.diagnostics.end());
  report.diagnostics.insert(report.diagnostics.end(), dims.notes.begin(),
                            dims.notes.end());

  QuantEnv initial = initial_quant_env(program);
  QuantEnv final_env = initial;
  if (dims.valid()) {
    QuantVerdict quant = check_quant_program(program);
    report.quant = quant.succeeded ? "succeed" : "fail";
    report.diagnostics.insert(report.diagnostics.end(),
                              quant.diagnostics.begin(),
                              quant.diagnostics.end());
    final_env = quant.env;
    for (const auto& [var, name] : final_env) {
      if (initial.at(var) != name) {
        report.promotions.push_back({var, to_string(name), {}});
      }
    }
  }

  auto warnings = lint_discipline(program, {options.strict_discipline});
  report.lint = warnings.empty() ? "clean"
                : options.strict_discipline ? "errors"
                                            : "warnings";
  for (const auto& w : warnings) report.diagnostics.push_back(w.to_diagnostic());

  if (options.dump_env) {
    report.has_env = true;
    for (const auto& [var, unit] : dims.env) {
      report.rho.push_back({var, to_string(unit.dims), to_string(unit.factor)});
    }
    for (const auto& [var, name] : final_env) {
      report.tau.push_back({var, to_string(name), {}});
    }
  }

  sort_and_dedupe(report.diagnostics);
  return report;
}

FileReport check_file(const std::filesystem::path& path,
                      const CheckOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    FileReport report;
    report.file = path.string();
    Diagnostic d;
    d.phase = Phase::kParse;
    d.code = "IO-ERROR";
    d.message = "cannot read file";
    report.diagnostics.push_back(d);
    return report;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return check_source(path.string(), buf.str(), options);
}

int exit_code(const FileReport& report) {
  int code = 0;
  for (const auto& d : report.diagnostics) {
    if (d.severity != Severity::kError) continue;
    code = std::max(code, d.phase == Phase::kParse ? 2 : 1);
  }
  return code;
}

int exit_code(const std::vector<FileReport>& reports) {
  int code = 0;
  for (const auto& r : reports) code = std::max(code, exit_code(r));
  return code;
}

namespace {

nlohmann::json position_json(const Position& p) {
  return {{"line", p.line}, {"column", p.column}};
}

nlohmann::json entries_json(const std::vector<EnvEntry>& entries, bool factor) {
  auto out = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j = {{"var", e.var}, {"value", e.value}};
    if (factor) j["factor"] = e.factor;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const FileReport& report) {
  nlohmann::json j;
  j["schema"] = kJsonSchemaVersion;
  j["file"] = report.file;
  j["verdicts"] = {{"parse", report.parsed ? "ok" : "error"},
                   {"dims", report.dims},
                   {"quant", report.quant},
                   {"lint", report.lint}};
  j["exit_code"] = exit_code(report);
  auto diags = nlohmann::json::array();
  for (const auto& d : report.diagnostics) {
    nlohmann::json related = nlohmann::json::array();
    for (const auto& [k, v] : d.related) related.push_back({k, v});
    nlohmann::json dj = {
        {"file", report.file},
        {"span",
         {{"start", position_json(d.span.begin)},
          {"end", position_json(d.span.end)}}},
        {"phase", to_string(d.phase)},
        {"severity", to_string(d.severity)},
        {"code", d.code},
        {"message", d.message},
        {"related", std::move(related)},
    };
    if (d.koq_type != 0) dj["koq_type"] = d.koq_type;
    diags.push_back(std::move(dj));
  }
  j["diagnostics"] = std::move(diags);
  j["promotions"] = entries_json(report.promotions, false);
  if (report.has_env) {
    j["env"] = {{"rho", entries_json(report.rho, true)},
                {"tau", entries_json(report.tau, false)}};
  }
  return j;
}

std::string render_text(const nlohmann::json& report) {
  std::string out;
  const std::string file = report.at("file").get<std::string>();
  for (const auto& d : report.at("diagnostics")) {
    const auto& start = d.at("span").at("start");
    std::string tag = d.at("code").get<std::string>();
    if (d.contains("koq_type")) {
      tag += fmt::format(", type {}", d.at("koq_type").get<int>());
    }
    out += fmt::format("{}:{}:{}: {}: [{}] {}\n", file,
                       start.at("line").get<int>(),
                       start.at("column").get<int>(),
                       d.at("severity").get<std::string>(), tag,
                       d.at("message").get<std::string>());
  }
  for (const auto& p : report.at("promotions")) {
    out += fmt::format("{}: note: `{}` promoted to {}\n", file,
                       p.at("var").get<std::string>(),
                       p.at("value").get<std::string>());
  }
  if (report.contains("env")) {
    for (const auto& e : report.at("env").at("rho")) {
      out += fmt::format("  rho {} : {} (factor {})\n",
                         e.at("var").get<std::string>(),
                         e.at("value").get<std::string>(),
                         e.at("factor").get<std::string>());
    }
    for (const auto& e : report.at("env").at("tau")) {
      out += fmt::format("  tau {} : {}\n", e.at("var").get<std::string>(),
                         e.at("value").get<std::string>());
    }
  }
  const auto& v = report.at("verdicts");
  if (v.at("parse") == "ok") {
    out += fmt::format("{}: dims {}, quantities {}, lint {}\n", file,
                       v.at("dims").get<std::string>(),
                       v.at("quant").get<std::string>(),
                       v.at("lint").get<std::string>());
  } else {
    out += fmt::format("{}: not checked\n", file);
  }
  return out;
}

}  // namespace quantlint

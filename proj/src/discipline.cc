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

#include "quantlint/discipline.h"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "quantlint/pretty.h"
#include "quantlint/quant_checker.h"

namespace quantlint {

Diagnostic LintWarning::to_diagnostic() const {
  Diagnostic d;
  d.phase = Phase::kLint;
  d.severity = severity;
  d.code = rule;
  d.message = message;
  d.span = span;
  d.koq_type = 2;
  return d;
}

namespace {

// line -> rules allowed on the line after the comment.
std::map<int, std::set<std::string>> suppressions(const Program& p) {
  std::map<int, std::set<std::string>> out;
  constexpr std::string_view kMarker = "quantlint: allow";
  for (const auto& c : p.comments) {
    auto at = c.text.find(kMarker);
    if (at == std::string::npos) continue;
    std::string rest = c.text.substr(at + kMarker.size());
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream words(rest);
    for (std::string rule; words >> rule;) out[c.line + 1].insert(rule);
  }
  return out;
}

class Linter {
 public:
  Linter(const Program& p, const LintOptions& options)
      : program_(p), options_(options), funs_(build_fun_env(p).funs) {}

  std::vector<LintWarning> run() {
    for (const auto& d : program_.decls) {
      const auto* f = std::get_if<FunctionDecl>(&d);
      if (f == nullptr || f->return_quant.is_named()) continue;
      multiplications(f->body, fmt::format("in `{}`, whose result has no name",
                                           f->name));
    }
    for (const auto& s : program_.stmts) multiplications(s);

    QuantEnv env = initial_quant_env(program_);
    thread(program_.stmts, env);

    auto allowed = suppressions(program_);
    std::erase_if(out_, [&](const LintWarning& w) {
      auto it = allowed.find(w.span.begin.line);
      return it != allowed.end() && it->second.contains(w.rule);
    });
    std::stable_sort(out_.begin(), out_.end(),
                     [](const LintWarning& a, const LintWarning& b) {
                       return a.span.begin < b.span.begin;
                     });
    return std::move(out_);
  }

 private:
  void multiplications(const Statement& s) {
    if (s.kind == Statement::Kind::kAssign) {
      multiplications(s.value, "in the main block");
      return;
    }
    multiplications(s.condition.lhs, "in the main block");
    multiplications(s.condition.rhs, "in the main block");
    for (const auto& t : s.then_branch) multiplications(t);
    for (const auto& e : s.else_branch) multiplications(e);
  }

  // Reports maximal product/quotient subtrees only.
  void multiplications(const Expr& e, const std::string& context) {
    if (e.kind == Expr::Kind::kMul || e.kind == Expr::Kind::kDiv) {
      report(e.span, std::string(kRuleMultiplication),
             fmt::format("`{}` multiplies {}; move it into a function with a "
                         "named result",
                         pretty(e), context));
      return;
    }
    for (const auto& child : e.operands) multiplications(child, context);
  }

  // Mirrors the statement rules so promotions are seen; failures are the
  // checker's business and are skipped here.
  void thread(const std::vector<Statement>& stmts, QuantEnv& env) {
    for (const auto& s : stmts) {
      if (s.kind == Statement::Kind::kIf) {
        thread(s.then_branch, env);
        thread(s.else_branch, env);
        continue;
      }
      auto target = env.find(s.target);
      if (target == env.end()) continue;
      try {
        QuantName value = infer_quant(s.value, env, funs_);
        if (target->second.is_named() && value.is_noname()) {
          report(s.span, std::string(kRuleNonameAssign),
                 fmt::format("`{}` is {} but is assigned an unnamed value; the "
                             "kind of quantity is never checked (Type 2 risk)",
                             s.target, to_string(target->second)));
        }
        AssignResult r = assign_op(s.target, target->second, value, env);
        if (r.succeeded()) env = r.env();
      } catch (const QuantError&) {
      }
    }
  }

  void report(Span span, std::string rule, std::string message) {
    out_.push_back(LintWarning{span, std::move(rule), std::move(message),
                               options_.strict ? Severity::kError
                                               : Severity::kWarning});
  }

  const Program& program_;
  const LintOptions& options_;
  FunEnv funs_;
  std::vector<LintWarning> out_;
};

}  // namespace

std::vector<LintWarning> lint_discipline(const Program& p,
                                         const LintOptions& options) {
  return Linter(p, options).run();
}

}  // namespace quantlint

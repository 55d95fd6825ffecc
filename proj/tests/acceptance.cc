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


// Acceptance gate. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails.

#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "quantlint/dim_checker.h"
#include "quantlint/discipline.h"
#include "quantlint/driver.h"
#include "quantlint/parser.h"
#include "quantlint/pretty.h"
#include "quantlint/quant_checker.h"
#include "quantlint/units.h"
#include "test_support.h"
#include "name_oracle.h"

namespace quantlint::testing {
namespace {

// Pinned thresholds.
constexpr int kOracleDepth = 4;
constexpr std::size_t kMinEnumeratedCases = 10'000;
constexpr int kGroupLawTrials = 1'000;
constexpr std::size_t kSyntheticPrograms = 20;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Program corpus(const std::string& name) {
  return parse(read_file(corpus_dir() / name));
}

Outcome golden_derivations() {
  Outcome o;
  QuantVerdict named = check_quant_program(corpus("addtq_named.uq"));
  o.require(named.succeeded, "addtq with named parameters did not succeed");

  Program mismatch = corpus("addtq_mismatch.uq");
  QuantVerdict v2 = check_quant_program(mismatch);
  const Expr& call2 = mismatch.stmts.at(0).value.operands.at(0);
  o.require(!v2.succeeded, "t,w arguments did not fail");
  o.require(v2.diagnostics.size() == 1, "t,w: expected exactly one diagnostic");
  if (!v2.diagnostics.empty()) {
    const Diagnostic& d = v2.diagnostics[0];
    o.require(d.code == "KOQ-TYPE1" && d.koq_type == 1,
              "t,w: failure is not Type 1 " + d.code);
    o.require(d.span == call2.operands.at(1).span,
              "t,w: failure not located at the binding of w");
  }

  Program noname = corpus("addtq_noname.uq");
  QuantVerdict v3 = check_quant_program(noname);
  const FunctionDecl body_fn = function_decls(noname).at(0);
  o.require(!v3.succeeded, "unnamed-parameter addtq did not fail");
  if (!v3.diagnostics.empty()) {
    const Diagnostic& d = v3.diagnostics[0];
    o.require(d.code == "KOQ-MISMATCH", "unnamed addtq: code " + d.code);
    o.require(d.span == body_fn.body.span,
              "unnamed addtq: failure not located at x + y in the body");
  }
  o.detail = o.pass ? "Succeed / Fail at argument w / Fail at body x + y"
                    : o.detail;
  return o;
}

bool has_rule(const std::vector<LintWarning>& ws, std::string_view rule) {
  for (const auto& w : ws) {
    if (w.rule == rule && w.severity == Severity::kError) return true;
  }
  return false;
}

Outcome type_two_scenario() {
  Outcome o;
  Program inline_p = corpus("kinetic_inline.uq");
  DimVerdict dims = check_dims_program(inline_p);
  o.require(dims.valid(), "inline energy is not dimensionally valid");
  Dims rhs = infer_dims(inline_p.stmts.at(0).value, dims.env);
  o.require(rhs == unit_to_spec("J", default_unit_table()).dims &&
                rhs == unit_to_spec("kg*m^2*s^-2", default_unit_table()).dims,
            "inline energy rhs is " + to_string(rhs));
  o.require(check_quant_program(inline_p).succeeded,
            "plain quantity check rejects the inline energy");
  auto strict = lint_discipline(inline_p, {.strict = true});
  o.require(has_rule(strict, kRuleMultiplication), "strict mode: no DISC-MUL");
  o.require(has_rule(strict, kRuleNonameAssign),
            "strict mode: no DISC-NONAME-ASSIGN");
  o.require(exit_code(check_file(corpus_dir() / "kinetic_inline.uq",
                                 {.strict_discipline = true})) == 1,
            "strict mode does not flip the exit code");

  Program fn = corpus("kinetic_function.uq");
  o.require(check_dims_program(fn).valid(), "kin_energy: dims fail");
  o.require(check_quant_program(fn).succeeded, "kin_energy: quantities fail");
  o.require(lint_discipline(fn, {.strict = true}).empty(),
            "kin_energy: discipline findings");
  if (o.pass) {
    o.detail = "dims (2,1,-2), quantities Succeed, strict lint DISC-MUL + "
               "DISC-NONAME-ASSIGN; kin_energy clean";
  }
  return o;
}

Outcome name_oracle(const OracleSetup& setup) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  OracleReport r = run_name_oracle(setup, kOracleDepth);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  o.require(r.cases >= kMinEnumeratedCases,
            fmt::format("only {} cases", r.cases));
  o.require(r.all_agree(), r.first_disagreement);
  if (o.pass) {
    o.detail = fmt::format("{}/{} trees agree ({} succeed), {:.1f}s", r.agreed,
                           r.cases, r.succeeded, secs);
  }
  return o;
}

Outcome algebra_tables() {
  Outcome o;
  const QuantName n = QuantName::named("T");
  const QuantName m = QuantName::named("W");
  const QuantName none = QuantName::noname();
  int passed = 0;
  auto check = [&](bool ok, const std::string& what) {
    o.require(ok, what);
    passed += ok;
  };

  check(diamond(n, n) == n, "Named n ◊ Named n");
  check(diamond(n, none) == n, "Named n ◊ Noname");
  check(diamond(none, n) == n, "Noname ◊ Named n");
  check(diamond(none, none) == none, "Noname ◊ Noname");

  check(triangle(n, n) == none, "Named △ Named");
  check(triangle(n, none) == none, "Named △ Noname");
  check(triangle(none, n) == none, "Noname △ Named");
  check(triangle(none, none) == none, "Noname △ Noname");

  const QuantEnv tau{{"uv", none}, {"other", m}};
  const QuantEnv named_tau{{"uv", n}, {"other", m}};
  auto r1 = assign_op("uv", n, n, named_tau);
  check(r1.succeeded() && r1.env() == named_tau, "Named n ⊴ Named n");
  auto r2 = assign_op("uv", n, m, named_tau);
  check(!r2.succeeded(), "Named n1 ⊴ Named n2");
  auto r3 = assign_op("uv", n, none, named_tau);
  check(r3.succeeded() && r3.env() == named_tau, "Named n ⊴ Noname");
  auto r4 = assign_op("uv", none, none, tau);
  check(r4.succeeded() && r4.env() == tau, "Noname ⊴ Noname");
  auto r5 = assign_op("uv", none, n, tau);
  QuantEnv overridden = tau;
  overridden["uv"] = n;
  check(r5.succeeded() && r5.env() == overridden,
        "Noname ⊴ Named n overrides uv");

  if (o.pass) o.detail = fmt::format("{}/13 table rows", passed);
  return o;
}

Outcome dimension_algebra() {
  Outcome o;
  const UnitTable& t = default_unit_table();
  struct Row {
    const char* alias;
    const char* expansion;
  };
  const Row rows[] = {{"Hz", "s^-1"},
                      {"N", "m * kg * s^-2"},
                      {"Pa", "m^-1 * kg * s^-2"},
                      {"J", "m^2 * kg * s^-2"},
                      {"N*m", "m^2 * kg * s^-2"},
                      {"W", "m^2 * kg * s^-3"}};
  for (const auto& r : rows) {
    o.require(unit_to_spec(r.alias, t) == unit_to_spec(r.expansion, t),
              fmt::format("{} does not expand to {}", r.alias, r.expansion));
  }

  std::mt19937_64 rng(2026);
  auto draw = [&] {
    return Dims(random_rational(rng), random_rational(rng), random_rational(rng));
  };
  int laws = 0;
  for (int i = 0; i < kGroupLawTrials; ++i) {
    Dims a = draw(), b = draw(), c = draw();
    bool ok = dim_mul(a, b) == dim_mul(b, a) &&
              dim_mul(dim_mul(a, b), c) == dim_mul(a, dim_mul(b, c)) &&
              dim_mul(a, Dims()) == a &&
              dim_mul(a, dim_div(Dims(), a)) == Dims();
    laws += ok;
  }
  o.require(laws == kGroupLawTrials,
            fmt::format("group laws held in {}/{} trials", laws, kGroupLawTrials));

  // Inch is exactly 2.54 cm; a yard is 36 inches.
  const Rational inch(254, 10000);
  Rational yard = conversion_factor(unit_to_spec("yard", t), unit_to_spec("m", t))
                      .scale;
  o.require(yard == inch * 36, "yard -> metre is " + to_string(yard));
  if (o.pass) {
    o.detail = fmt::format("6 aliases, {} group-law trials, yard = {} m", laws,
                           to_string(yard));
  }
  return o;
}

Outcome associativity_regression() {
  Outcome o;
  const QuantName work = QuantName::named("Work");
  const QuantName torque = QuantName::named("Torque");
  bool algebra_rejects = false;
  try {
    diamond(work, diamond(torque, QuantName::noname()));
  } catch (const QuantityMismatch&) {
    algebra_rejects = true;
  }
  o.require(algebra_rejects, "Work ◊ (Torque ◊ Noname) was accepted");

  Program p = parse(R"(begin
  w : float of J named Work;
  t : float of N*m named Torque;
  u : float of J;
  r : float of J
in
  r := w + (t + u)
end)");
  o.require(!check_quant_program(p).succeeded,
            "checker accepts w + (t + u)");
  if (o.pass) o.detail = "Work ◊ (Torque ◊ Noname) fails in algebra and checker";
  return o;
}

Outcome round_trip() {
  Outcome o;
  auto files = corpus_files();
  std::size_t synthetic = 0;
  for (const auto& f : files) {
    synthetic += f.parent_path().filename() == "synthetic";
    Program p = parse(read_file(f));
    o.require(same_structure(parse(pretty(p)), p), f.filename().string());
  }
  o.require(synthetic == kSyntheticPrograms,
            fmt::format("{} synthetic programs", synthetic));
  if (o.pass) {
    o.detail = fmt::format("{} programs ({} reference, {} synthetic)",
                           files.size(),
                           files.size() - synthetic, synthetic);
  }
  return o;
}

bool monotone(const QuantEnv& before, const QuantEnv& after) {
  if (before.size() != after.size()) return false;
  for (const auto& [var, old] : before) {
    auto it = after.find(var);
    if (it == after.end()) return false;
    if (it->second != old && !(old.is_noname() && it->second.is_named())) {
      return false;
    }
  }
  return true;
}

Outcome environments() {
  Outcome o;
  std::size_t programs = 0;
  std::size_t steps = 0;
  for (const auto& f : corpus_files()) {
    Program p = parse(read_file(f));
    const std::string name = f.filename().string();

    // ρ: the checked environment is exactly the declared one, and checking
    // twice gives the same answer.
    DimVerdict first = check_dims_program(p);
    DimVerdict second = check_dims_program(p);
    o.require(first.env == second.env, name + ": ρ differs between runs");
    if (!first.valid()) continue;
    o.require(first.env == build_dim_env(variable_decls(p)),
              name + ": ρ differs from the declarations");
    ++programs;

    // τ: every statement prefix only promotes Noname to Named.
    FunEnv funs = build_fun_env(p).funs;
    QuantEnv previous = initial_quant_env(p);
    const QuantEnv initial = previous;
    for (std::size_t k = 1; k <= p.stmts.size(); ++k) {
      std::vector<Statement> prefix(p.stmts.begin(), p.stmts.begin() + k);
      QuantVerdict v = check_quant_stmts(prefix, initial, funs);
      o.require(monotone(previous, v.env) && monotone(initial, v.env),
                name + ": τ not monotone at statement " + std::to_string(k));
      ++steps;
      if (!v.succeeded) break;
      previous = v.env;
    }
    QuantVerdict whole = check_quant_program(p);
    o.require(monotone(initial, whole.env), name + ": final τ not monotone");
    for (const auto& [var, q] : whole.env) {
      o.require(!q.is_quantvar(), name + ": quantity variable escaped into τ");
    }
  }
  if (o.pass) {
    o.detail = fmt::format("{} dimensionally valid programs, {} statement prefixes",
                           programs, steps);
  }
  return o;
}

}  // namespace
}  // namespace quantlint::testing

int main() {
  using namespace quantlint::testing;
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"golden derivations", golden_derivations},
      {"type 2 scenario", type_two_scenario},
      {"name oracle (depth 4)", [] { return name_oracle(plain_setup()); }},
      {"name oracle with calls (depth 4)",
       [] { return name_oracle(call_setup()); }},
      {"algebra tables", algebra_tables},
      {"dimension algebra", dimension_algebra},
      {"associativity regression", associativity_regression},
      {"parser round trip", round_trip},
      {"tau monotonicity, rho immutability", environments},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    fmt::print("[{}] {}. {}: {}\n", o.pass ? "PASS" : "FAIL", index, c.title,
               o.detail);
  }
  fmt::print("{} of {} criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}

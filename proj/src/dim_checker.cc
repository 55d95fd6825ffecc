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

#include "quantlint/dim_checker.h"

#include <fmt/format.h>

#include <set>
#include <variant>

namespace quantlint {

DimError::DimError(std::string code, Span span, std::string message,
                   std::string subject)
    : std::runtime_error(std::move(message)),
      code_(std::move(code)),
      span_(span),
      subject_(std::move(subject)) {}

Diagnostic DimError::to_diagnostic() const {
  Diagnostic d;
  d.phase = Phase::kDims;
  d.severity = Severity::kError;
  d.code = code_;
  d.message = what();
  d.span = span_;
  if (expected) d.related.emplace_back("expected", to_string(*expected));
  if (found) d.related.emplace_back("found", to_string(*found));
  return d;
}

namespace {

DimError mismatch(Span span, const Dims& expected, const Dims& found,
                  std::string message) {
  DimError e("DIM-MISMATCH", span, std::move(message));
  e.expected = expected;
  e.found = found;
  return e;
}

Diagnostic conversion_note(Span span, const UnitSpec& from, const UnitSpec& to,
                           std::string_view what) {
  Conversion c = conversion_factor(from, to);
  Diagnostic d;
  d.phase = Phase::kDims;
  d.severity = Severity::kNote;
  d.code = "DIM-CONVERSION";
  d.message = fmt::format("{} needs a unit conversion (scale {})", what,
                          to_decimal_string(c.scale));
  d.span = span;
  d.related.emplace_back("scale", to_string(c.scale));
  return d;
}

UnitSpec resolve_unit(const std::string& text, Span span,
                      const UnitTable& table) {
  try {
    return unit_to_spec(text, table);
  } catch (const UnknownUnit& e) {
    throw DimError("UNKNOWN-UNIT", span, e.what(), e.symbol());
  } catch (const AffineComposition& e) {
    throw DimError("AFFINE-COMPOSITION", span, e.what(), e.symbol());
  } catch (const UnitError& e) {
    throw DimError("MALFORMED-UNIT", span, e.what(), text);
  }
}

class DimInference {
 public:
  using Result = std::variant<UnitSpec, DimError>;

  DimInference(const DimEnv& env, const DimFunEnv& funs,
               std::vector<Diagnostic>* notes)
      : env_(env), funs_(funs), notes_(notes) {}

  UnitSpec infer(const Expr& e) const {
    Result r = attempt(e);
    if (auto* err = std::get_if<DimError>(&r)) throw std::move(*err);
    return std::get<UnitSpec>(std::move(r));
  }

  Result attempt(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::kVar: {
        auto it = env_.find(e.name);
        if (it == env_.end()) {
          return DimError("UNBOUND-VAR", e.span,
                          fmt::format("unbound variable `{}`", e.name), e.name);
        }
        return it->second;
      }
      case Expr::Kind::kScalarMul: {
        Result operand = attempt(e.operands.at(0));
        if (auto* u = std::get_if<UnitSpec>(&operand)) u->offset = 0;
        return operand;
      }
      case Expr::Kind::kCall:
        return call(e);
      default:
        break;
    }
    Result lhs_r = attempt(e.lhs());
    if (std::holds_alternative<DimError>(lhs_r)) return lhs_r;
    Result rhs_r = attempt(e.rhs());
    if (std::holds_alternative<DimError>(rhs_r)) return rhs_r;
    const UnitSpec& lhs = std::get<UnitSpec>(lhs_r);
    const UnitSpec& rhs = std::get<UnitSpec>(rhs_r);
    switch (e.kind) {
      case Expr::Kind::kAdd:
      case Expr::Kind::kSub:
        if (lhs.dims != rhs.dims) {
          return mismatch(e.span, lhs.dims, rhs.dims,
                          fmt::format("cannot {} {} and {}",
                                      e.kind == Expr::Kind::kAdd ? "add"
                                                                 : "subtract",
                                      to_string(lhs.dims), to_string(rhs.dims)));
        }
        if (lhs.factor != rhs.factor) {
          note(conversion_note(e.rhs().span, rhs, lhs, "right operand"));
        }
        return UnitSpec{lhs.dims, lhs.factor};
      case Expr::Kind::kMul:
        return UnitSpec{dim_mul(lhs.dims, rhs.dims), lhs.factor * rhs.factor};
      case Expr::Kind::kDiv:
        return UnitSpec{dim_div(lhs.dims, rhs.dims), lhs.factor / rhs.factor};
      default:
        break;
    }
    throw std::logic_error("unhandled expression kind");
  }

 private:
  Result call(const Expr& e) const {
    auto it = funs_.find(e.name);
    if (it == funs_.end()) {
      return DimError("UNKNOWN-FUNCTION", e.span,
                      fmt::format("unknown function `{}`", e.name), e.name);
    }
    const DimSignature& sig = it->second;
    if (sig.params.size() != e.operands.size()) {
      return DimError("ARITY", e.span,
                      fmt::format("`{}` takes {} argument(s), {} given", e.name,
                                  sig.params.size(), e.operands.size()),
                      e.name);
    }
    for (std::size_t i = 0; i < sig.params.size(); ++i) {
      const auto& [param, expected] = sig.params[i];
      const Expr& arg = e.operands[i];
      Result r = attempt(arg);
      if (std::holds_alternative<DimError>(r)) return r;
      const UnitSpec& found = std::get<UnitSpec>(r);
      if (found.dims != expected.dims) {
        return mismatch(arg.span, expected.dims, found.dims,
                        fmt::format("argument for parameter `{}` of `{}` has "
                                    "dims {}, expected {}",
                                    param, e.name, to_string(found.dims),
                                    to_string(expected.dims)));
      }
      if (found.factor != expected.factor) {
        note(conversion_note(arg.span, found, expected,
                             fmt::format("argument for `{}`", param)));
      }
    }
    return sig.result;
  }

  void note(Diagnostic d) const {
    if (notes_ != nullptr) notes_->push_back(std::move(d));
  }

  const DimEnv& env_;
  const DimFunEnv& funs_;
  std::vector<Diagnostic>* notes_;
};

// Statement walker. Holds ρ by const reference only.
class DimProgramChecker {
 public:
  DimProgramChecker(const Program& p, const UnitTable& table)
      : program_(p), table_(table) {}

  DimVerdict run() {
    for (const auto& decl : program_.decls) {
      if (const auto* v = std::get_if<Declaration>(&decl)) {
        declare(*v);
      } else {
        define(std::get<FunctionDecl>(decl));
      }
    }
    for (const auto& s : program_.stmts) statement(s);
    verdict_.env = std::move(env_);
    verdict_.functions = std::move(funs_);
    return std::move(verdict_);
  }

 private:
  void declare(const Declaration& d) {
    if (env_.contains(d.var) || poisoned_.contains(d.var)) {
      fail(DimError("DUPLICATE-DECL", d.span,
                    fmt::format("variable `{}` declared twice", d.var), d.var));
      return;
    }
    try {
      env_.emplace(d.var, resolve_unit(d.unit, d.unit_span, table_));
    } catch (const DimError& e) {
      poisoned_.insert(d.var);
      fail(e);
    }
  }

  void define(const FunctionDecl& f) {
    if (funs_.contains(f.name) || poisoned_funs_.contains(f.name)) {
      fail(DimError("DUPLICATE-DECL", f.span,
                    fmt::format("function `{}` declared twice", f.name), f.name));
      return;
    }
    DimSignature sig;
    DimEnv locals;
    try {
      for (const auto& p : f.params) {
        UnitSpec u = resolve_unit(p.unit, p.unit_span, table_);
        sig.params.emplace_back(p.var, u);
        locals.emplace(p.var, u);
      }
      sig.result = resolve_unit(f.return_unit, f.return_span, table_);
    } catch (const DimError& e) {
      poisoned_funs_.insert(f.name);
      fail(e);
      return;
    }
    // The body is checked once, here, against the declared result.
    guarded([&] {
      std::vector<Diagnostic> notes;
      UnitSpec body = DimInference(locals, funs_, &notes).infer(f.body);
      if (body.dims != sig.result.dims) {
        throw mismatch(f.body.span, sig.result.dims, body.dims,
                       fmt::format("body of `{}` has dims {}, declared {}",
                                   f.name, to_string(body.dims),
                                   to_string(sig.result.dims)));
      }
      if (body.factor != sig.result.factor) {
        notes.push_back(conversion_note(f.body.span, body, sig.result,
                                        fmt::format("result of `{}`", f.name)));
      }
      keep_notes(notes);
    });
    funs_.emplace(f.name, std::move(sig));
  }

  void statement(const Statement& s) {
    if (s.kind == Statement::Kind::kIf) {
      guarded([&] {
        std::vector<Diagnostic> notes;
        DimInference inf(env_, funs_, &notes);
        UnitSpec lhs = inf.infer(s.condition.lhs);
        UnitSpec rhs = inf.infer(s.condition.rhs);
        if (lhs.dims != rhs.dims) {
          throw mismatch(s.condition.span, lhs.dims, rhs.dims,
                         fmt::format("cannot compare {} with {}",
                                     to_string(lhs.dims), to_string(rhs.dims)));
        }
        keep_notes(notes);
      });
      for (const auto& t : s.then_branch) statement(t);
      for (const auto& e : s.else_branch) statement(e);
      return;
    }
    guarded([&] {
      auto target = env_.find(s.target);
      if (target == env_.end()) {
        throw DimError("UNBOUND-VAR", s.target_span,
                       fmt::format("assignment to undeclared variable `{}`",
                                   s.target),
                       s.target);
      }
      std::vector<Diagnostic> notes;
      UnitSpec value = DimInference(env_, funs_, &notes).infer(s.value);
      if (value.dims != target->second.dims) {
        throw mismatch(s.span, target->second.dims, value.dims,
                       fmt::format("cannot assign {} to `{}` of dims {}",
                                   to_string(value.dims), s.target,
                                   to_string(target->second.dims)));
      }
      if (value.factor != target->second.factor) {
        notes.push_back(conversion_note(
            s.value.span, value, target->second,
            fmt::format("assignment to `{}`", s.target)));
      }
      keep_notes(notes);
    });
  }

  template <typename F>
  void guarded(F&& check) {
    try {
      check();
    } catch (const DimError& e) {
      // Knock-on errors from a declaration that already failed.
      if ((e.code() == "UNBOUND-VAR" && poisoned_.contains(e.subject())) ||
          (e.code() == "UNKNOWN-FUNCTION" &&
           poisoned_funs_.contains(e.subject()))) {
        return;
      }
      fail(e);
    }
  }

  void fail(const DimError& e) { verdict_.diagnostics.push_back(e.to_diagnostic()); }

  void keep_notes(std::vector<Diagnostic>& notes) {
    for (auto& n : notes) verdict_.notes.push_back(std::move(n));
  }

  const Program& program_;
  const UnitTable& table_;
  DimEnv env_;
  DimFunEnv funs_;
  std::set<std::string> poisoned_;
  std::set<std::string> poisoned_funs_;
  DimVerdict verdict_;
};

}  // namespace

DimEnv build_dim_env(const std::vector<Declaration>& decls,
                     const UnitTable& table) {
  DimEnv env;
  for (const auto& d : decls) {
    if (env.contains(d.var)) {
      throw DimError("DUPLICATE-DECL", d.span,
                     fmt::format("variable `{}` declared twice", d.var), d.var);
    }
    env.emplace(d.var, resolve_unit(d.unit, d.unit_span, table));
  }
  return env;
}

Dims infer_dims(const Expr& e, const DimEnv& env, const DimFunEnv& funs,
                std::vector<Diagnostic>* notes) {
  return DimInference(env, funs, notes).infer(e).dims;
}

std::variant<Dims, DimError> try_infer_dims(const Expr& e, const DimEnv& env,
                                            const DimFunEnv& funs,
                                            std::vector<Diagnostic>* notes) {
  auto r = DimInference(env, funs, notes).attempt(e);
  if (auto* err = std::get_if<DimError>(&r)) return std::move(*err);
  return std::get<UnitSpec>(r).dims;
}

DimVerdict check_dims_program(const Program& p, const UnitTable& table) {
  return DimProgramChecker(p, table).run();
}

}  // namespace quantlint

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

#include "quantlint/quant_checker.h"

#include <fmt/format.h>

#include <set>

#include "quantlint/union_find.h"

namespace quantlint {

QuantError::QuantError(std::string code, Span span, std::string message,
                       int koq_type)
    : std::runtime_error(std::move(message)),
      code_(std::move(code)),
      span_(span),
      koq_type_(koq_type) {}

Diagnostic QuantError::to_diagnostic() const {
  Diagnostic d;
  d.phase = Phase::kQuant;
  d.severity = Severity::kError;
  d.code = code_;
  d.message = what();
  d.span = span_;
  d.related = related;
  d.koq_type = koq_type_;
  return d;
}

UnifyFail::UnifyFail(std::string quantvar, QuantName first, QuantName second)
    : std::runtime_error(fmt::format("?{} bound to both {} and {}", quantvar,
                                     to_string(first), to_string(second))),
      quantvar_(std::move(quantvar)),
      first_(std::move(first)),
      second_(std::move(second)) {}

namespace {

std::string where(const Span& s) {
  return fmt::format("{}:{}", s.begin.line, s.begin.column);
}

QuantName substitute(const QuantName& q, const Substitution& subst) {
  if (!q.is_quantvar()) return q;
  auto it = subst.find(q.text());
  return it == subst.end() ? QuantName::noname() : it->second;
}

bool is_generic(const FunctionDecl& f) {
  if (f.return_quant.is_quantvar()) return true;
  for (const auto& p : f.params) {
    if (p.quant.is_quantvar()) return true;
  }
  return false;
}

}  // namespace

Substitution unify_quantvars(const FunctionDecl& sig,
                             const std::vector<QuantName>& arg_names) {
  if (arg_names.size() != sig.params.size()) {
    throw std::invalid_argument("argument count does not match signature");
  }
  const std::size_t n = sig.params.size();
  UnionFind classes(n);
  std::map<std::string, std::size_t> first_use;
  for (std::size_t i = 0; i < n; ++i) {
    const QuantName& q = sig.params[i].quant;
    if (!q.is_quantvar()) continue;
    auto [it, fresh] = first_use.emplace(q.text(), i);
    if (!fresh) classes.unite(it->second, i);
  }

  // Combine the argument names of each class at its representative.
  std::map<std::size_t, QuantName> class_name;
  for (std::size_t i = 0; i < n; ++i) {
    const QuantName& q = sig.params[i].quant;
    if (!q.is_quantvar()) continue;
    std::size_t root = classes.find(i);
    QuantName& acc = class_name[root];
    try {
      acc = diamond(acc, arg_names[i]);
    } catch (const QuantityMismatch& e) {
      throw UnifyFail(q.text(), e.lhs(), e.rhs());
    }
  }

  Substitution subst;
  for (const auto& [id, index] : first_use) {
    subst.emplace(id, class_name[classes.find(index)]);
  }
  return subst;
}

FunctionDecl instantiate(const FunctionDecl& sig, const Substitution& subst) {
  FunctionDecl out = sig;
  for (auto& p : out.params) p.quant = substitute(p.quant, subst);
  out.return_quant = substitute(out.return_quant, subst);
  return out;
}

namespace {

QuantInference invoke(const Expr& call, const QuantEnv& env, const FunEnv& funs);

QuantInference mismatch(const Expr& e, const QuantName& lhs,
                        const QuantName& rhs) {
  QuantError err("KOQ-MISMATCH", e.span,
                 fmt::format("cannot {} {} and {}",
                             e.kind == Expr::Kind::kAdd ? "add" : "subtract",
                             to_string(lhs), to_string(rhs)));
  err.related = {{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
  return err;
}

QuantInference infer(const Expr& e, const QuantEnv& env, const FunEnv& funs) {
  switch (e.kind) {
    case Expr::Kind::kVar: {
      auto it = env.find(e.name);
      if (it == env.end()) {
        return QuantError("UNBOUND-VAR", e.span,
                          fmt::format("unbound variable `{}`", e.name));
      }
      return it->second;
    }
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
    case Expr::Kind::kMul:
    case Expr::Kind::kDiv: {
      QuantInference lhs = infer(e.lhs(), env, funs);
      if (std::holds_alternative<QuantError>(lhs)) return lhs;
      QuantInference rhs = infer(e.rhs(), env, funs);
      if (std::holds_alternative<QuantError>(rhs)) return rhs;
      const QuantName& l = std::get<QuantName>(lhs);
      const QuantName& r = std::get<QuantName>(rhs);
      if (e.kind == Expr::Kind::kMul || e.kind == Expr::Kind::kDiv) {
        return triangle(l, r);
      }
      std::optional<QuantName> sum = try_diamond(l, r);
      if (!sum) return mismatch(e, l, r);
      return *std::move(sum);
    }
    case Expr::Kind::kScalarMul:
      return infer(e.operands.at(0), env, funs);
    case Expr::Kind::kCall:
      return invoke(e, env, funs);
  }
  throw std::logic_error("unhandled expression kind");
}

QuantInference invoke(const Expr& call, const QuantEnv& env,
                      const FunEnv& funs) {
  auto it = funs.find(call.name);
  if (it == funs.end()) {
    return QuantError("UNKNOWN-FUNCTION", call.span,
                      fmt::format("unknown function `{}`", call.name));
  }
  const FunctionDecl* sig = &it->second;
  if (sig->params.size() != call.operands.size()) {
    return QuantError("ARITY", call.span,
                      fmt::format("`{}` takes {} argument(s), {} given",
                                  call.name, sig->params.size(),
                                  call.operands.size()));
  }

  std::vector<QuantName> arg_names;
  arg_names.reserve(call.operands.size());
  for (const auto& arg : call.operands) {
    QuantInference q = infer(arg, env, funs);
    if (std::holds_alternative<QuantError>(q)) return q;
    arg_names.push_back(std::get<QuantName>(std::move(q)));
  }

  FunctionDecl resolved;
  if (is_generic(*sig)) {
    try {
      resolved = instantiate(*sig, unify_quantvars(*sig, arg_names));
    } catch (const UnifyFail& e) {
      QuantError err("KOQ-UNIFY", call.span,
                     fmt::format("arguments of `{}` disagree on ?{}: {} vs {}",
                                 call.name, e.quantvar(), to_string(e.first()),
                                 to_string(e.second())),
                     1);
      err.related = {{"quantvar", "?" + e.quantvar()},
                     {"first", to_string(e.first())},
                     {"second", to_string(e.second())}};
      return err;
    }
    sig = &resolved;
  }

  // τ' binds each parameter to its declared name; each ⊴ against {} may
  // override that binding with the argument's name.
  QuantEnv local;
  for (const auto& p : sig->params) local[p.var] = p.quant;
  for (std::size_t i = 0; i < sig->params.size(); ++i) {
    const Declaration& param = sig->params[i];
    AssignResult bound = assign_op(param.var, param.quant, arg_names[i], {});
    if (!bound.succeeded()) {
      QuantError err(
          "KOQ-TYPE1", call.operands[i].span,
          fmt::format("argument for parameter `{}` of `{}` is {}, expected {}",
                      param.var, call.name, to_string(arg_names[i]),
                      to_string(param.quant)),
          1);
      err.related = {{"parameter", param.var},
                     {"expected", to_string(param.quant)},
                     {"found", to_string(arg_names[i])}};
      return err;
    }
    for (const auto& [var, name] : bound.env()) local[var] = name;
  }

  QuantInference body = infer(sig->body, local, funs);
  if (auto* err = std::get_if<QuantError>(&body)) {
    err->related.emplace_back("called_from", where(call.span));
    err->related.emplace_back("function", call.name);
    return body;
  }
  const QuantName& body_name = std::get<QuantName>(body);
  std::optional<QuantName> result = try_diamond(sig->return_quant, body_name);
  if (!result) {
    QuantError err("KOQ-RETURN", call.span,
                   fmt::format("`{}` computes {} but declares {}", call.name,
                               to_string(body_name),
                               to_string(sig->return_quant)));
    err.related = {{"declared", to_string(sig->return_quant)},
                   {"found", to_string(body_name)}};
    return err;
  }
  return *std::move(result);
}

QuantName value_or_throw(QuantInference r) {
  if (auto* err = std::get_if<QuantError>(&r)) throw std::move(*err);
  return std::get<QuantName>(std::move(r));
}

}  // namespace

QuantInference try_infer_quant(const Expr& e, const QuantEnv& env,
                               const FunEnv& funs) {
  return infer(e, env, funs);
}

QuantName infer_quant(const Expr& e, const QuantEnv& env, const FunEnv& funs) {
  return value_or_throw(infer(e, env, funs));
}

QuantName invoke_function(const Expr& call, const QuantEnv& env,
                          const FunEnv& funs) {
  return value_or_throw(invoke(call, env, funs));
}

AssignResult check_assignment(const Statement& s, const QuantEnv& env,
                              const FunEnv& funs) {
  auto target = env.find(s.target);
  if (target == env.end()) {
    throw QuantError("UNBOUND-VAR", s.target_span,
                     fmt::format("assignment to undeclared variable `{}`",
                                 s.target));
  }
  QuantName value = infer_quant(s.value, env, funs);
  return assign_op(s.target, target->second, value, env);
}

namespace {

class StatementChecker {
 public:
  explicit StatementChecker(const FunEnv& funs) : funs_(funs) {}

  // Returns false at the first failure; `env` then holds τ before it.
  bool run(const std::vector<Statement>& stmts, QuantEnv& env) {
    for (const auto& s : stmts) {
      if (!statement(s, env)) return false;
    }
    return true;
  }

  std::vector<Diagnostic> diagnostics;

 private:
  bool statement(const Statement& s, QuantEnv& env) {
    try {
      if (s.kind == Statement::Kind::kAssign) return assignment(s, env);
      return branch(s, env);
    } catch (const QuantError& e) {
      diagnostics.push_back(e.to_diagnostic());
      return false;
    }
  }

  bool assignment(const Statement& s, QuantEnv& env) {
    AssignResult r = check_assignment(s, env, funs_);
    if (r.succeeded()) {
      env = r.env();
      return true;
    }
    const AssignFail& f = r.failure();
    QuantError err("KOQ-TYPE1", s.span,
                   fmt::format("cannot assign {} to `{}` of {}", to_string(f.rhs),
                               f.target, to_string(f.lhs)),
                   1);
    err.related = {{"variable", f.target},
                   {"expected", to_string(f.lhs)},
                   {"found", to_string(f.rhs)}};
    throw err;
  }

  bool branch(const Statement& s, QuantEnv& env) {
    // Both sides of a comparison must refer to the same entity.
    QuantName lhs = infer_quant(s.condition.lhs, env, funs_);
    QuantName rhs = infer_quant(s.condition.rhs, env, funs_);
    try {
      diamond(lhs, rhs);
    } catch (const QuantityMismatch&) {
      QuantError err("KOQ-MISMATCH", s.condition.span,
                     fmt::format("cannot compare {} with {}", to_string(lhs),
                                 to_string(rhs)));
      err.related = {{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
      throw err;
    }

    const QuantEnv before = env;
    if (!run(s.then_branch, env)) return false;
    // The else branch starts from the then branch's result.
    QuantEnv after_then = env;
    if (run(s.else_branch, env)) return true;

    StatementChecker alone(funs_);
    QuantEnv scratch = before;
    if (alone.run(s.else_branch, scratch)) {
      Diagnostic note;
      note.phase = Phase::kQuant;
      note.severity = Severity::kNote;
      note.code = "KOQ-BRANCH";
      note.message =
          "the else branch is checked after the then branch's promotions; "
          "on its own it would succeed";
      note.span = s.span;
      for (const auto& [var, name] : after_then) {
        if (before.at(var) != name) {
          note.related.emplace_back(var, to_string(name));
        }
      }
      diagnostics.push_back(std::move(note));
    }
    return false;
  }

  const FunEnv& funs_;
};

}  // namespace

QuantVerdict check_quant_stmts(const std::vector<Statement>& stmts,
                               const QuantEnv& env, const FunEnv& funs) {
  QuantVerdict v;
  v.env = env;
  StatementChecker checker(funs);
  v.succeeded = checker.run(stmts, v.env);
  v.diagnostics = std::move(checker.diagnostics);
  return v;
}

QuantEnv initial_quant_env(const Program& p) {
  QuantEnv env;
  for (const auto& d : p.decls) {
    if (const auto* v = std::get_if<Declaration>(&d)) env[v->var] = v->quant;
  }
  return env;
}

FunEnvResult build_fun_env(const Program& p) {
  FunEnvResult out;
  for (const auto& d : p.decls) {
    const auto* f = std::get_if<FunctionDecl>(&d);
    if (f == nullptr) continue;
    if (out.funs.contains(f->name)) {
      QuantError err("DUPLICATE-DECL", f->span,
                     fmt::format("function `{}` declared twice", f->name));
      out.diagnostics.push_back(err.to_diagnostic());
      continue;
    }
    // Quantity variables stand for an unknown but fixed name while the body
    // is checked; `?q` cannot clash with a user identifier.
    Substitution rigid;
    for (const auto& param : f->params) {
      if (param.quant.is_quantvar()) {
        rigid.emplace(param.quant.text(),
                      QuantName::named("?" + param.quant.text()));
      }
    }
    FunctionDecl generic = instantiate(*f, rigid);
    QuantEnv local;
    for (const auto& param : generic.params) local[param.var] = param.quant;
    try {
      QuantName body = infer_quant(generic.body, local, out.funs);
      try {
        diamond(generic.return_quant, body);
      } catch (const QuantityMismatch&) {
        QuantError err("KOQ-RETURN", f->body.span,
                       fmt::format("body of `{}` is {} but declares {}", f->name,
                                   to_string(body),
                                   to_string(generic.return_quant)));
        err.related = {{"declared", to_string(generic.return_quant)},
                       {"found", to_string(body)}};
        throw err;
      }
    } catch (const QuantError& e) {
      out.diagnostics.push_back(e.to_diagnostic());
    }
    out.funs.emplace(f->name, *f);
  }
  return out;
}

QuantVerdict check_quant_program(const Program& p) {
  FunEnvResult sigma = build_fun_env(p);
  QuantVerdict v = check_quant_stmts(p.stmts, initial_quant_env(p), sigma.funs);
  bool decls_ok = true;
  for (const auto& d : sigma.diagnostics) {
    decls_ok = decls_ok && d.severity != Severity::kError;
  }
  v.diagnostics.insert(v.diagnostics.begin(), sigma.diagnostics.begin(),
                       sigma.diagnostics.end());
  v.succeeded = v.succeeded && decls_ok;
  return v;
}

}  // namespace quantlint

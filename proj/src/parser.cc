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

#include "quantlint/parser.h"

#include <fmt/format.h>

#include <cctype>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

namespace quantlint {

namespace {

std::string describe_expected(const std::set<std::string>& expected) {
  std::string out;
  std::size_t i = 0;
  for (const auto& e : expected) {
    if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
    out += e;
    ++i;
  }
  return out;
}

}  // namespace

ParseError::ParseError(Position where, std::set<std::string> expected,
                       std::string found)
    : std::runtime_error(fmt::format("{}:{}: expected {} but found {}",
                                     where.line, where.column,
                                     describe_expected(expected), found)),
      where_(where),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

ParseError::ParseError(Position where, const std::string& message)
    : std::runtime_error(
          fmt::format("{}:{}: {}", where.line, where.column, message)),
      where_(where) {}

namespace {

struct Token {
  enum class Kind { kIdent, kKeyword, kNumber, kPunct, kEof };

  Kind kind = Kind::kEof;
  std::string text;
  Span span;

  std::string describe() const {
    switch (kind) {
      case Kind::kEof:
        return "end of input";
      case Kind::kNumber:
        return fmt::format("number `{}`", text);
      case Kind::kIdent:
        return fmt::format("identifier `{}`", text);
      default:
        return fmt::format("`{}`", text);
    }
  }
};

const std::unordered_set<std::string_view>& keywords() {
  static const std::unordered_set<std::string_view> kw = {
      "begin", "in",   "end", "float", "of",   "named", "noname",
      "fun",   "is",   "if",  "then",  "else",
  };
  return kw;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run(std::vector<Comment>& comments) {
    std::vector<Token> out;
    for (;;) {
      skip_trivia(comments);
      Token t;
      t.span.begin = here();
      if (at_end()) {
        t.kind = Token::Kind::kEof;
        t.span.end = here();
        out.push_back(std::move(t));
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                             peek() == '_')) {
          t.text += advance();
        }
        t.kind = keywords().contains(t.text) ? Token::Kind::kKeyword
                                             : Token::Kind::kIdent;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        while (std::isdigit(static_cast<unsigned char>(peek()))) t.text += advance();
        if (peek() == '.' && pos_ + 1 < src_.size() &&
            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
          t.text += advance();
          while (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.text += advance();
          }
        }
        t.kind = Token::Kind::kNumber;
      } else {
        t.kind = Token::Kind::kPunct;
        t.text = advance();
        char n = peek();
        if ((c == ':' && n == '=') || (c == '<' && n == '=') ||
            (c == '>' && n == '=')) {
          t.text += advance();
        }
        static const std::string_view kSingles = ":;,()+-*/^?<=>";
        if (t.text.size() == 1 && kSingles.find(c) == std::string_view::npos) {
          throw ParseError(t.span.begin,
                           fmt::format("unexpected character `{}`", c));
        }
      }
      t.span.end = here();
      out.push_back(std::move(t));
    }
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  Position here() const { return {line_, col_, pos_}; }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_trivia(std::vector<Comment>& comments) {
    for (;;) {
      while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      }
      if (peek() == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
        Comment c{line_, {}};
        advance();
        advance();
        while (!at_end() && peek() != '\n') c.text += advance();
        comments.push_back(std::move(c));
        continue;
      }
      return;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) {
    tokens_ = Lexer(src).run(program_.comments);
  }

  Program program() {
    Position start = peek().span.begin;
    expect_keyword("begin");
    declarations();
    expect_keyword("in");
    program_.stmts = statements();
    expect_keyword("end");
    if (peek().kind != Token::Kind::kEof) fail({"end of input"});
    program_.span = {start, last_end_};
    return std::move(program_);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::kEof) ++pos_;
    last_end_ = t.span.end;
    return t;
  }

  bool is_keyword(std::string_view kw) const {
    return peek().kind == Token::Kind::kKeyword && peek().text == kw;
  }
  bool is_punct(std::string_view p) const {
    return peek().kind == Token::Kind::kPunct && peek().text == p;
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    throw ParseError(peek().span.begin, std::move(expected), peek().describe());
  }

  const Token& expect_keyword(std::string_view kw) {
    if (!is_keyword(kw)) fail({fmt::format("`{}`", kw)});
    return advance();
  }

  const Token& expect_punct(std::string_view p) {
    if (!is_punct(p)) fail({fmt::format("`{}`", p)});
    return advance();
  }

  const Token& expect_ident(const char* what) {
    if (peek().kind != Token::Kind::kIdent) fail({what});
    return advance();
  }

  // --- declarations -------------------------------------------------------

  void declarations() {
    std::map<std::string, Position> vars;
    std::map<std::string, Position> funs;
    while (!is_keyword("in")) {
      if (is_keyword("fun")) {
        FunctionDecl f = function();
        if (auto [it, fresh] = funs.emplace(f.name, f.span.begin); !fresh) {
          throw ParseError(f.span.begin,
                           fmt::format("function `{}` already declared at {}:{}",
                                       f.name, it->second.line,
                                       it->second.column));
        }
        program_.decls.emplace_back(std::move(f));
      } else if (peek().kind == Token::Kind::kIdent) {
        Declaration d = declaration(/*allow_quantvar=*/false);
        if (auto [it, fresh] = vars.emplace(d.var, d.span.begin); !fresh) {
          throw ParseError(d.span.begin,
                           fmt::format("variable `{}` already declared at {}:{}",
                                       d.var, it->second.line, it->second.column));
        }
        program_.decls.emplace_back(std::move(d));
      } else {
        fail({"declaration", "`fun`", "`in`"});
      }
      if (is_punct(";")) {
        advance();
      } else if (!is_keyword("in")) {
        fail({"`;`", "`in`"});
      }
    }
  }

  Declaration declaration(bool allow_quantvar) {
    Declaration d;
    const Token& name = expect_ident("variable name");
    d.var = name.text;
    d.span.begin = name.span.begin;
    expect_punct(":");
    auto [unit, unit_span] = unit_annotation();
    d.unit = std::move(unit);
    d.unit_span = unit_span;
    d.quant = quant_annotation(allow_quantvar);
    d.span.end = last_end_;
    return d;
  }

  std::pair<std::string, Span> unit_annotation() {
    expect_keyword("float");
    expect_keyword("of");
    Span span;
    span.begin = peek().span.begin;
    std::string text = unit_expr();
    span.end = last_end_;
    return {std::move(text), span};
  }

  QuantName quant_annotation(bool allow_quantvar) {
    if (is_keyword("noname")) {
      advance();
      return QuantName::noname();
    }
    if (!is_keyword("named")) return QuantName::noname();
    advance();
    if (is_punct("?")) {
      Position at = advance().span.begin;
      if (!allow_quantvar) {
        throw ParseError(at,
                         "quantity variables are only allowed in function "
                         "signatures");
      }
      return QuantName::quantvar(expect_ident("quantity variable").text);
    }
    if (peek().kind != Token::Kind::kIdent) {
      fail({"quantity name", "`?`"});
    }
    return QuantName::named(advance().text);
  }

  FunctionDecl function() {
    FunctionDecl f;
    f.span.begin = expect_keyword("fun").span.begin;
    f.name = expect_ident("function name").text;
    expect_punct("(");
    std::map<std::string, Position> seen;
    if (!is_punct(")")) {
      for (;;) {
        Declaration p = declaration(/*allow_quantvar=*/true);
        if (auto [it, fresh] = seen.emplace(p.var, p.span.begin); !fresh) {
          throw ParseError(p.span.begin,
                           fmt::format("parameter `{}` repeated", p.var));
        }
        f.params.push_back(std::move(p));
        if (!is_punct(",")) break;
        advance();
      }
    }
    expect_punct(")");
    expect_punct(":");
    auto [unit, unit_span] = unit_annotation();
    f.return_unit = std::move(unit);
    Position quant_at = peek().span.begin;
    f.return_quant = quant_annotation(/*allow_quantvar=*/true);
    f.return_span = {unit_span.begin, last_end_};
    if (f.return_quant.is_quantvar()) {
      bool bound = false;
      for (const auto& p : f.params) {
        bound = bound || p.quant == f.return_quant;
      }
      if (!bound) {
        throw ParseError(quant_at,
                         fmt::format("quantity variable {} does not appear in "
                                     "any parameter of `{}`",
                                     to_string(f.return_quant), f.name));
      }
    }
    if (is_keyword("is") || is_punct("=")) {
      advance();
    } else {
      fail({"`is`", "`=`"});
    }
    f.body = expr();
    f.span.end = last_end_;
    return f;
  }

  // --- unit expressions ---------------------------------------------------
  // Consumed token by token and returned as canonical text; the units module
  // resolves it later against whatever table is active.

  std::string unit_expr() {
    std::string out = unit_power();
    while (is_punct("*") || is_punct("/")) {
      std::string op = advance().text;
      out += " " + op + " " + unit_power();
    }
    return out;
  }

  std::string unit_power() {
    std::string base = unit_atom();
    if (!is_punct("^")) return base;
    advance();
    return base + "^" + unit_exponent();
  }

  std::string unit_atom() {
    if (is_punct("(")) {
      advance();
      std::string inner = unit_expr();
      expect_punct(")");
      return "(" + inner + ")";
    }
    if (peek().kind == Token::Kind::kIdent) return advance().text;
    if (peek().kind == Token::Kind::kNumber && peek().text == "1") {
      return advance().text;
    }
    fail({"unit expression"});
  }

  std::string integer_literal() {
    if (peek().kind != Token::Kind::kNumber ||
        peek().text.find('.') != std::string::npos) {
      fail({"integer exponent"});
    }
    return advance().text;
  }

  std::string signed_integer() {
    std::string sign;
    if (is_punct("-")) {
      advance();
      sign = "-";
    } else if (is_punct("+")) {
      advance();
    }
    return sign + integer_literal();
  }

  std::string unit_exponent() {
    if (!is_punct("(")) return signed_integer();
    advance();
    std::string e = signed_integer();
    if (is_punct("/")) {
      advance();
      e += "/" + integer_literal();
    }
    expect_punct(")");
    return "(" + e + ")";
  }

  // --- statements ---------------------------------------------------------

  std::vector<Statement> statements() {
    std::vector<Statement> out;
    while (!is_keyword("end") && !is_keyword("else")) {
      out.push_back(statement());
      if (!is_punct(";")) break;
      advance();
    }
    return out;
  }

  Statement statement() {
    if (is_keyword("if")) {
      Position begin = advance().span.begin;
      Comparison cond = comparison();
      expect_keyword("then");
      auto then_branch = statements();
      expect_keyword("else");
      auto else_branch = statements();
      expect_keyword("end");
      return Statement::branch(std::move(cond), std::move(then_branch),
                               std::move(else_branch), {begin, last_end_});
    }
    if (peek().kind != Token::Kind::kIdent) fail({"statement"});
    const Token& target = advance();
    std::string name = target.text;
    Span target_span = target.span;
    expect_punct(":=");
    Expr value = expr();
    Statement s = Statement::assign(std::move(name), std::move(value),
                                    {target_span.begin, last_end_});
    s.target_span = target_span;
    return s;
  }

  Comparison comparison() {
    Comparison c;
    c.lhs = expr();
    static const std::map<std::string, Comparison::Op, std::less<>> kOps = {
        {"<", Comparison::Op::kLess},       {"<=", Comparison::Op::kLessEq},
        {"=", Comparison::Op::kEq},         {">=", Comparison::Op::kGreaterEq},
        {">", Comparison::Op::kGreater},
    };
    auto it = peek().kind == Token::Kind::kPunct ? kOps.find(peek().text)
                                                 : kOps.end();
    if (it == kOps.end()) fail({"`<`", "`<=`", "`=`", "`>=`", "`>`"});
    advance();
    c.op = it->second;
    c.rhs = expr();
    c.span = {c.lhs.span.begin, last_end_};
    return c;
  }

  // --- unit value expressions ---------------------------------------------
  //   expr := term (('+' | '-') term)*
  //   term := unary (('*' | '/') unary)*
  //   unary := NUMBER '*' unary | primary
  //   primary := IDENT | IDENT '(' args ')' | '(' expr ')'

  Expr expr() {
    Expr acc = term();
    while (is_punct("+") || is_punct("-")) {
      auto kind = advance().text == "+" ? Expr::Kind::kAdd : Expr::Kind::kSub;
      Expr rhs = term();
      Span span{acc.span.begin, last_end_};
      acc = Expr::binary(kind, std::move(acc), std::move(rhs), span);
    }
    return acc;
  }

  Expr term() {
    Expr acc = unary();
    while (is_punct("*") || is_punct("/")) {
      auto kind = advance().text == "*" ? Expr::Kind::kMul : Expr::Kind::kDiv;
      Expr rhs = unary();
      Span span{acc.span.begin, last_end_};
      acc = Expr::binary(kind, std::move(acc), std::move(rhs), span);
    }
    return acc;
  }

  Expr unary() {
    if (peek().kind == Token::Kind::kNumber) {
      const Token& lit = advance();
      Position begin = lit.span.begin;
      auto value = parse_rational(lit.text);
      if (!value) throw ParseError(begin, "malformed number");
      if (!is_punct("*")) fail({"`*` after a scalar"});
      advance();
      Expr operand = unary();
      return Expr::scale(std::move(*value), std::move(operand),
                         {begin, last_end_});
    }
    return primary();
  }

  Expr primary() {
    if (is_punct("(")) {
      advance();
      Expr inner = expr();
      expect_punct(")");
      return inner;
    }
    if (peek().kind != Token::Kind::kIdent) {
      fail({"unit expression"});
    }
    const Token& id = advance();
    std::string name = id.text;
    Position begin = id.span.begin;
    if (!is_punct("(")) return Expr::var(std::move(name), id.span);
    advance();
    std::vector<Expr> args;
    if (!is_punct(")")) {
      for (;;) {
        args.push_back(expr());
        if (!is_punct(",")) break;
        advance();
      }
    }
    expect_punct(")");
    return Expr::call(std::move(name), std::move(args), {begin, last_end_});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Position last_end_;
  Program program_;
};

}  // namespace

Program parse(std::string_view source) { return Parser(source).program(); }

}  // namespace quantlint

// SPDX-License-Identifier: Apache-2.0
#include "intprop/parser.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace intprop {

namespace {

struct Token {
  enum class Kind { Int, Ident, Sym, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_ws();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_ = {Token::Kind::End, "", line_, col_};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        bump();
      tok_ = {Token::Kind::Int, std::string(text_.substr(start, pos_ - start)),
              tok_.line, tok_.col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        bump();
      tok_ = {Token::Kind::Ident,
              std::string(text_.substr(start, pos_ - start)), tok_.line,
              tok_.col};
      return;
    }
    // multi-char symbols: <= >= != ..
    static const char* two[] = {"<=", ">=", "!=", ".."};
    for (const char* s : two) {
      if (text_.substr(pos_, 2) == s) {
        tok_ = {Token::Kind::Sym, s, tok_.line, tok_.col};
        bump();
        bump();
        return;
      }
    }
    static const std::string singles = "+-*^<>=;()[]";
    if (singles.find(c) != std::string::npos) {
      tok_ = {Token::Kind::Sym, std::string(1, c), tok_.line, tok_.col};
      bump();
      return;
    }
    throw ParseError(line_, col_, std::string("unexpected character '") + c +
                         "'");
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  CspModel run() {
    CspModel model;
    while (lex_.peek().kind != Token::Kind::End) {
      statement(model);
    }
    return model;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.col, msg);
  }

  bool try_sym(const std::string& s) {
    if (lex_.peek().kind == Token::Kind::Sym && lex_.peek().text == s) {
      lex_.next();
      return true;
    }
    return false;
  }

  Token expect_sym(const std::string& s) {
    Token t = lex_.next();
    if (t.kind != Token::Kind::Sym || t.text != s)
      fail(t, "expected '" + s + "'");
    return t;
  }

  Token expect_ident() {
    Token t = lex_.next();
    if (t.kind != Token::Kind::Ident) fail(t, "expected identifier");
    return t;
  }

  BigInt expect_int() {
    bool negate = try_sym("-");
    Token t = lex_.next();
    if (t.kind != Token::Kind::Int) fail(t, "expected integer literal");
    BigInt v(t.text, 10);
    return negate ? BigInt(-v) : v;
  }

  void statement(CspModel& model) {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Ident && t.text == "var") {
      lex_.next();
      var_decl(model);
    } else if (t.kind == Token::Kind::Ident && t.text == "maximize") {
      Token kw = lex_.next();
      if (model.objective) fail(kw, "duplicate maximize statement");
      model.objective = expr(model);
      expect_sym(";");
    } else {
      constraint(model);
    }
  }

  void var_decl(CspModel& model) {
    Token name = expect_ident();
    if (names_.count(name.text)) fail(name, "duplicate variable '" + name.text + "'");
    Token kw = expect_ident();
    if (kw.text != "in") fail(kw, "expected 'in'");
    IntInterval dom = IntInterval::all();
    if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "Z") {
      lex_.next();
    } else {
      expect_sym("[");
      BigInt lo = expect_int();
      expect_sym("..");
      BigInt hi = expect_int();
      expect_sym("]");
      dom = IntInterval::finite(lo, hi);
    }
    expect_sym(";");
    names_[name.text] = model.var_count();
    model.vars.push_back(VarDecl{name.text, dom});
  }

  void constraint(CspModel& model) {
    ExprPtr lhs = expr(model);
    Token t = lex_.next();
    RelOp op;
    if (t.kind != Token::Kind::Sym) fail(t, "expected relation operator");
    if (t.text == "<") op = RelOp::Lt;
    else if (t.text == "<=") op = RelOp::Le;
    else if (t.text == "=") op = RelOp::Eq;
    else if (t.text == "!=") op = RelOp::Ne;
    else if (t.text == ">=") op = RelOp::Ge;
    else if (t.text == ">") op = RelOp::Gt;
    else fail(t, "expected relation operator");
    ExprPtr rhs = expr(model);
    expect_sym(";");
    model.constraints.push_back(ArithConstraint{lhs, op, rhs});
  }

  // expr := ['-'] term (('+'|'-') term)*
  ExprPtr expr(const CspModel& model) {
    ExprPtr e;
    if (try_sym("-")) {
      e = Expr::neg(term(model));
    } else {
      e = term(model);
    }
    for (;;) {
      if (try_sym("+")) {
        e = Expr::add(e, term(model));
      } else if (try_sym("-")) {
        e = Expr::sub(e, term(model));
      } else {
        return e;
      }
    }
  }

  // term := factor ('*' factor)*
  ExprPtr term(const CspModel& model) {
    ExprPtr e = factor(model);
    while (try_sym("*")) e = Expr::mul(e, factor(model));
    return e;
  }

  // factor := primary ['^' INT]
  ExprPtr factor(const CspModel& model) {
    ExprPtr e = primary(model);
    if (try_sym("^")) {
      Token t = lex_.next();
      if (t.kind != Token::Kind::Int) fail(t, "expected exponent literal");
      BigInt n(t.text, 10);
      if (n < 1 || !n.fits_ulong_p()) fail(t, "exponent out of range");
      e = Expr::pow(e, n.get_ui());
    }
    return e;
  }

  ExprPtr primary(const CspModel& model) {
    Token t = lex_.next();
    if (t.kind == Token::Kind::Int) return Expr::constant(BigInt(t.text, 10));
    if (t.kind == Token::Kind::Ident) {
      auto it = names_.find(t.text);
      if (it == names_.end()) fail(t, "unknown identifier '" + t.text + "'");
      return Expr::variable(it->second);
    }
    if (t.kind == Token::Kind::Sym && t.text == "(") {
      ExprPtr e = expr(model);
      expect_sym(")");
      return e;
    }
    fail(t, "expected expression");
  }

  Lexer lex_;
  std::map<std::string, VarId> names_;
};

}  // namespace

CspModel parse_model(std::string_view text) { return Parser(text).run(); }

}  // namespace intprop

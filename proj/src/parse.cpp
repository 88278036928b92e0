// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tropsch/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tropsch {

namespace {

struct Token {
  enum Kind { kNumber, kIdent, kSymbol, kEnd } kind = kEnd;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  Lexer(const std::string& text, int line0 = 1) : s_(text), line_(line0) {
    advance();
  }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  bool accept_symbol(const char* sym) {
    if (tok_.kind == Token::kSymbol && tok_.text == sym) {
      advance();
      return true;
    }
    return false;
  }

  void expect_symbol(const char* sym) {
    if (!accept_symbol(sym)) fail(std::string("expected '") + sym + "'");
  }

  bool at_end() const { return tok_.kind == Token::kEnd; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.col);
  }

 private:
  void advance() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_.kind = Token::kEnd;
      tok_.text.clear();
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::kNumber;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::kIdent;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    tok_.kind = Token::kSymbol;
    tok_.text = std::string(1, c);
    ++pos_;
    ++col_;
  }

  std::string s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

long parse_long(Lexer& lx) {
  bool neg = lx.accept_symbol("-");
  if (lx.peek().kind != Token::kNumber) lx.fail("expected an integer");
  Token t = lx.take();
  long v = 0;
  try {
    v = std::stol(t.text);
  } catch (...) {
    throw ParseError("integer out of range", t.line, t.col);
  }
  return neg ? -v : v;
}

// Rational literal: [-] digits [/ digits].
Rational rational_tok(Lexer& lx, bool* literal_one = nullptr) {
  bool neg = lx.accept_symbol("-");
  if (lx.peek().kind != Token::kNumber) lx.fail("expected a number");
  Token num = lx.take();
  std::string text = num.text;
  bool slash = false;
  if (lx.peek().kind == Token::kSymbol && lx.peek().text == "/") {
    lx.take();
    if (lx.peek().kind != Token::kNumber) lx.fail("expected a denominator");
    Token den = lx.take();
    if (den.text.find_first_not_of('0') == std::string::npos)
      throw ParseError("zero denominator", den.line, den.col);
    text += "/" + den.text;
    slash = true;
  }
  if (literal_one) *literal_one = !neg && !slash && num.text == "1";
  Rational q(text);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

int var_index(const Token& t, const std::vector<std::string>& vars) {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == t.text) return static_cast<int>(i);
  throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
}

// Monomial word: factors joined by '*'; each factor a variable with an
// optional integer power, or the neutral word '1'.
Exponent mono_tok(Lexer& lx, const std::vector<std::string>& vars,
                  Flavor flavor) {
  std::vector<int> e(vars.size(), 0);
  for (;;) {
    if (lx.peek().kind == Token::kNumber && lx.peek().text == "1") {
      lx.take();
    } else if (lx.peek().kind == Token::kIdent) {
      Token t = lx.take();
      int idx = var_index(t, vars);
      long k = 1;
      if (lx.accept_symbol("^")) k = parse_long(lx);
      if (flavor == Flavor::kProjective && e[idx] + k < 0)
        throw ParseError("negative exponent in a projective monomial", t.line,
                         t.col);
      e[idx] += static_cast<int>(k);
    } else {
      lx.fail("expected a monomial");
    }
    if (!lx.accept_symbol("*")) break;
  }
  return Exponent(flavor, std::move(e));
}

void trop_term(Lexer& lx, const std::vector<std::string>& vars, Flavor flavor,
               TropPoly* out) {
  if (lx.peek().kind == Token::kNumber ||
      (lx.peek().kind == Token::kSymbol && lx.peek().text == "-")) {
    bool literal_one = false;
    Rational c = rational_tok(lx, &literal_one);
    if (lx.accept_symbol("+")) {
      Exponent u = mono_tok(lx, vars, flavor);
      out->add_term(u, TropScalar(c));
      return;
    }
    if (literal_one && lx.peek().kind == Token::kSymbol &&
        (lx.peek().text == "*" || lx.peek().text == "^"))
      lx.fail("unexpected operator after the constant monomial");
    // A bare `1` is the constant monomial (coefficient 0); any other bare
    // number is a constant term with that coefficient.
    out->add_term(Exponent(flavor, std::vector<int>(vars.size(), 0)),
                  TropScalar(literal_one ? Rational(0) : c));
    return;
  }
  Exponent u = mono_tok(lx, vars, flavor);
  out->add_term(u, TropScalar(0L));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  Lexer lx(text);
  Rational q = rational_tok(lx);
  if (!lx.at_end()) lx.fail("trailing input after a rational");
  return q;
}

TropScalar parse_trop_scalar(const std::string& text) {
  Lexer lx(text);
  if (lx.peek().kind == Token::kIdent && lx.peek().text == "inf") {
    lx.take();
    if (!lx.at_end()) lx.fail("trailing input after inf");
    return TropScalar::inf();
  }
  return TropScalar(parse_rational(text));
}

std::vector<Rational> parse_weights(const std::string& text) {
  Lexer lx(text);
  std::vector<Rational> out;
  if (lx.at_end()) return out;
  out.push_back(rational_tok(lx));
  while (lx.accept_symbol(",")) out.push_back(rational_tok(lx));
  if (!lx.at_end()) lx.fail("trailing input in a weight vector");
  return out;
}

TropPoly parse_trop_poly(const std::string& text,
                         const std::vector<std::string>& vars, Flavor flavor) {
  Lexer lx(text);
  TropPoly out(flavor, static_cast<int>(vars.size()));
  if (lx.peek().kind == Token::kIdent && lx.peek().text == "inf") {
    lx.take();
    if (!lx.at_end()) lx.fail("trailing input after inf");
    return out;
  }
  if (lx.peek().kind == Token::kIdent && lx.peek().text == "min") {
    lx.take();
    lx.expect_symbol("(");
    trop_term(lx, vars, flavor, &out);
    while (lx.accept_symbol(",")) trop_term(lx, vars, flavor, &out);
    lx.expect_symbol(")");
  } else {
    trop_term(lx, vars, flavor, &out);
  }
  if (!lx.at_end()) lx.fail("trailing input after a tropical polynomial");
  return out;
}

namespace {

// Expression evaluation over Q(t)[x...].
ValuedPoly vp_expr(Lexer& lx, const std::vector<std::string>& vars,
                   Flavor flavor);

ValuedPoly vp_const(const RatFunc& c, const std::vector<std::string>& vars,
                    Flavor flavor) {
  ValuedPoly p(flavor, static_cast<int>(vars.size()));
  p.add_term(Exponent(flavor, std::vector<int>(vars.size(), 0)), c);
  return p;
}

bool vp_is_const(const ValuedPoly& p, RatFunc* c) {
  if (p.is_zero()) {
    *c = RatFunc();
    return true;
  }
  if (p.terms().size() != 1) return false;
  const auto& [u, coef] = *p.terms().begin();
  if (!u.is_zero()) return false;
  *c = coef;
  return true;
}

ValuedPoly vp_pow(Lexer& lx, ValuedPoly base, long k,
                  const std::vector<std::string>& vars, Flavor flavor) {
  if (k < 0) {
    RatFunc c;
    if (vp_is_const(base, &c)) {
      if (c.is_zero()) lx.fail("division by zero");
      RatFunc inv = c.inverse();
      ValuedPoly acc = vp_const(RatFunc(Rational(1)), vars, flavor);
      for (long i = 0; i < -k; ++i) acc = acc * vp_const(inv, vars, flavor);
      return acc;
    }
    if (base.terms().size() == 1 && flavor == Flavor::kLaurent) {
      const auto& [u, coef] = *base.terms().begin();
      std::vector<int> e(u.size());
      for (int i = 0; i < u.size(); ++i) e[i] = static_cast<int>(k) * u[i];
      RatFunc cc(Rational(1));
      for (long i = 0; i < -k; ++i) cc = cc * coef.inverse();
      ValuedPoly p(flavor, base.nvars());
      p.add_term(Exponent(flavor, std::move(e)), cc);
      return p;
    }
    lx.fail("negative power of a non-invertible expression");
  }
  ValuedPoly acc = vp_const(RatFunc(Rational(1)), vars, flavor);
  for (long i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

ValuedPoly vp_atom(Lexer& lx, const std::vector<std::string>& vars,
                   Flavor flavor) {
  if (lx.accept_symbol("(")) {
    ValuedPoly p = vp_expr(lx, vars, flavor);
    lx.expect_symbol(")");
    return p;
  }
  if (lx.peek().kind == Token::kNumber) {
    Token t = lx.take();
    Rational q(t.text);
    q.canonicalize();
    return vp_const(RatFunc(q), vars, flavor);
  }
  if (lx.peek().kind == Token::kIdent) {
    Token t = lx.take();
    if (t.text == "t") return vp_const(RatFunc::t_power(1), vars, flavor);
    int idx = -1;
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == t.text) idx = static_cast<int>(i);
    if (idx < 0)
      throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
    std::vector<int> e(vars.size(), 0);
    e[idx] = 1;
    ValuedPoly p(flavor, static_cast<int>(vars.size()));
    p.add_term(Exponent(flavor, std::move(e)), RatFunc(Rational(1)));
    return p;
  }
  lx.fail("expected a number, variable, or parenthesized expression");
}

ValuedPoly vp_factor(Lexer& lx, const std::vector<std::string>& vars,
                     Flavor flavor) {
  ValuedPoly base = vp_atom(lx, vars, flavor);
  if (lx.accept_symbol("^")) {
    long k = parse_long(lx);
    if (flavor == Flavor::kProjective && k < 0) {
      RatFunc c;
      if (!vp_is_const(base, &c))
        lx.fail("negative exponent in a projective polynomial");
    }
    return vp_pow(lx, std::move(base), k, vars, flavor);
  }
  return base;
}

ValuedPoly vp_term(Lexer& lx, const std::vector<std::string>& vars,
                   Flavor flavor) {
  ValuedPoly acc = vp_factor(lx, vars, flavor);
  for (;;) {
    if (lx.accept_symbol("*")) {
      acc = acc * vp_factor(lx, vars, flavor);
    } else if (lx.accept_symbol("/")) {
      ValuedPoly rhs = vp_factor(lx, vars, flavor);
      RatFunc c;
      if (!vp_is_const(rhs, &c)) lx.fail("division by a non-constant");
      if (c.is_zero()) lx.fail("division by zero");
      acc = acc.scaled(c.inverse());
    } else {
      return acc;
    }
  }
}

ValuedPoly vp_expr(Lexer& lx, const std::vector<std::string>& vars,
                   Flavor flavor) {
  bool neg = lx.accept_symbol("-");
  ValuedPoly acc = vp_term(lx, vars, flavor);
  if (neg) acc = -acc;
  for (;;) {
    if (lx.accept_symbol("+")) {
      acc = acc + vp_term(lx, vars, flavor);
    } else if (lx.accept_symbol("-")) {
      acc = acc - vp_term(lx, vars, flavor);
    } else {
      return acc;
    }
  }
}

}  // namespace

ValuedPoly parse_valued_poly(const std::string& text,
                             const std::vector<std::string>& vars,
                             Flavor flavor) {
  Lexer lx(text);
  ValuedPoly p = vp_expr(lx, vars, flavor);
  if (!lx.at_end()) lx.fail("trailing input after a polynomial");
  return p;
}

RatFunc parse_rat_func(const std::string& text) {
  std::vector<std::string> no_vars;
  ValuedPoly p = parse_valued_poly(text, no_vars, Flavor::kLaurent);
  RatFunc c;
  if (p.is_zero()) return RatFunc();
  const auto& [u, coef] = *p.terms().begin();
  (void)u;
  return coef;
}

namespace {

std::string strip_comment(const std::string& line) {
  size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

IdealSpec parse_ideal_file(std::istream& in) {
  IdealSpec spec;
  bool have_ring = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    size_t colon = body.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'ring:' or 'gen:'", lineno, 1);
    std::string head = body.substr(0, colon);
    std::string rest = body.substr(colon + 1);
    // Trim the head.
    head.erase(0, head.find_first_not_of(" \t"));
    head.erase(head.find_last_not_of(" \t") + 1);
    if (head == "ring") {
      if (have_ring) throw ParseError("duplicate ring line", lineno, 1);
      Lexer lx(rest, lineno);
      bool have_vars = false, have_field = false;
      while (!lx.at_end()) {
        if (lx.peek().kind != Token::kIdent) lx.fail("expected vars= or field=");
        Token key = lx.take();
        lx.expect_symbol("=");
        if (key.text == "vars") {
          lx.expect_symbol("[");
          for (;;) {
            if (lx.peek().kind != Token::kIdent) lx.fail("expected a variable");
            spec.vars.push_back(lx.take().text);
            if (!lx.accept_symbol(",")) break;
          }
          lx.expect_symbol("]");
          have_vars = true;
        } else if (key.text == "field") {
          if (lx.peek().kind != Token::kIdent || lx.peek().text != "Q")
            lx.fail("expected Q or Q(t)");
          lx.take();
          if (lx.accept_symbol("(")) {
            if (lx.peek().kind != Token::kIdent || lx.peek().text != "t")
              lx.fail("expected Q(t)");
            lx.take();
            lx.expect_symbol(")");
            spec.mode = ValMode::kTAdic;
          } else {
            spec.mode = ValMode::kTrivial;
          }
          have_field = true;
        } else {
          throw ParseError("unknown ring attribute '" + key.text + "'",
                           key.line, key.col);
        }
      }
      if (!have_vars || !have_field)
        throw ParseError("ring line needs vars=[...] and field=...", lineno, 1);
      have_ring = true;
    } else if (head == "gen") {
      if (!have_ring)
        throw ParseError("gen before the ring line", lineno, 1);
      try {
        spec.gens.push_back(
            parse_valued_poly(rest, spec.vars, Flavor::kProjective));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " in generator", lineno, 1);
      }
    } else {
      throw ParseError("unknown line head '" + head + "'", lineno, 1);
    }
  }
  if (!have_ring) throw ParseError("missing ring line", lineno ? lineno : 1, 1);
  validate_ideal(spec);
  return spec;
}

IdealSpec parse_ideal_file_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open ideal file '" + path + "'");
  return parse_ideal_file(in);
}

}  // namespace tropsch

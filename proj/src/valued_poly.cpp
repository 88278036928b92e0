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

#include "tropsch/valued_poly.hpp"

namespace tropsch {

namespace {

void require_key(const Exponent& u, Flavor flavor, int nvars) {
  if (u.flavor() != flavor || u.size() != nvars)
    throw UsageError("exponent does not match the polynomial's variables");
}

}  // namespace

void ValuedPoly::add_term(const Exponent& u, const RatFunc& c) {
  require_key(u, flavor_, nvars_);
  if (c.is_zero()) return;
  auto it = terms_.find(u);
  if (it == terms_.end()) {
    terms_.emplace(u, c);
    return;
  }
  RatFunc sum = it->second + c;
  if (sum.is_zero())
    terms_.erase(it);
  else
    it->second = sum;
}

RatFunc ValuedPoly::coeff(const Exponent& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? RatFunc() : it->second;
}

ValuedPoly operator+(const ValuedPoly& a, const ValuedPoly& b) {
  if (a.flavor() != b.flavor() || a.nvars() != b.nvars())
    throw UsageError("ValuedPoly: operands must share flavor and variables");
  ValuedPoly out = a;
  for (const auto& [u, c] : b.terms()) out.add_term(u, c);
  return out;
}

ValuedPoly operator-(const ValuedPoly& a, const ValuedPoly& b) {
  return a + (-b);
}

ValuedPoly operator*(const ValuedPoly& a, const ValuedPoly& b) {
  if (a.flavor() != b.flavor() || a.nvars() != b.nvars())
    throw UsageError("ValuedPoly: operands must share flavor and variables");
  ValuedPoly out(a.flavor(), a.nvars());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      std::vector<int> e(u.size());
      for (int i = 0; i < u.size(); ++i) e[i] = u[i] + v[i];
      out.add_term(Exponent(a.flavor(), std::move(e)), cu * cv);
    }
  }
  return out;
}

ValuedPoly ValuedPoly::operator-() const {
  ValuedPoly out(flavor_, nvars_);
  for (const auto& [u, c] : terms_) out.add_term(u, -c);
  return out;
}

ValuedPoly ValuedPoly::scaled(const RatFunc& c) const {
  ValuedPoly out(flavor_, nvars_);
  if (c.is_zero()) return out;
  for (const auto& [u, cu] : terms_) out.add_term(u, cu * c);
  return out;
}

void QPoly::add_term(const Exponent& u, const Rational& c) {
  require_key(u, flavor_, nvars_);
  if (c == 0) return;
  auto it = terms_.find(u);
  if (it == terms_.end()) {
    terms_.emplace(u, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational QPoly::coeff(const Exponent& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? Rational(0) : it->second;
}

TropPoly trop_of(const ValuedPoly& f, ValMode mode) {
  TropPoly out(f.flavor(), f.nvars());
  for (const auto& [u, c] : f.terms()) out.add_term(u, val(c, mode));
  return out;
}

QPoly initial_form_classical(const ValuedPoly& f,
                             const std::vector<Rational>& w, ValMode mode) {
  if (f.is_zero())
    throw UsageError("initial_form_classical: zero polynomial");
  if (static_cast<int>(w.size()) != f.nvars())
    throw UsageError("initial_form_classical: weight length mismatch");
  bool have = false;
  Rational gamma(0);
  for (const auto& [u, c] : f.terms()) {
    Rational v = val(c, mode).value() + weight_dot(u, w);
    if (!have || v < gamma) {
      gamma = v;
      have = true;
    }
  }
  QPoly out(f.flavor(), f.nvars());
  for (const auto& [u, c] : f.terms()) {
    if (val(c, mode).value() + weight_dot(u, w) == gamma)
      out.add_term(u, residue(c, mode));
  }
  return out;
}

int degree(const ValuedPoly& f) {
  if (f.is_zero()) throw UsageError("degree: zero polynomial");
  int best = 0;
  bool first = true;
  for (const auto& [u, c] : f.terms()) {
    int t = u.total();
    if (first || t > best) best = t;
    first = false;
  }
  return best;
}

bool is_homogeneous(const ValuedPoly& f) {
  bool first = true;
  int deg = 0;
  for (const auto& [u, c] : f.terms()) {
    if (first) {
      deg = u.total();
      first = false;
    } else if (u.total() != deg) {
      return false;
    }
  }
  return true;
}

std::string to_string(const ValuedPoly& f,
                      const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [u, c] : f.terms()) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (s.empty()) {
      if (neg) {
        s += "-";
        cs = cs.substr(1);
      }
    } else {
      s += neg ? " - " : " + ";
      if (neg) cs = cs.substr(1);
    }
    bool compound = cs.find_first_of("+-") != std::string::npos;
    if (u.is_zero()) {
      s += compound ? "(" + cs + ")" : cs;
    } else {
      if (cs != "1") s += (compound ? "(" + cs + ")" : cs) + "*";
      s += monomial_string(u, vars);
    }
  }
  return s;
}

std::string to_string(const QPoly& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [u, c] : f.terms()) {
    Rational mag = rational_abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (u.is_zero()) {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + "*";
      s += monomial_string(u, vars);
    }
  }
  return s;
}

}  // namespace tropsch

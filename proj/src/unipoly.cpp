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

#include "tropsch/unipoly.hpp"

#include <algorithm>

namespace tropsch {

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_coeffs(std::vector<Rational> c) {
  UniPoly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

UniPoly UniPoly::t_power(int k, const Rational& a) {
  if (k < 0) throw UsageError("UniPoly: negative power of t is not polynomial");
  UniPoly p;
  if (a != 0) {
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = a;
  }
  return p;
}

int UniPoly::ord() const {
  if (is_zero()) throw UsageError("UniPoly: ord of the zero polynomial");
  for (int i = 0; i < static_cast<int>(c_.size()); ++i)
    if (c_[i] != 0) return i;
  throw UsageError("UniPoly: broken invariant");
}

const Rational& UniPoly::leading() const {
  if (is_zero()) throw UsageError("UniPoly: leading of the zero polynomial");
  return c_.back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < out.c_.size(); ++i)
    out.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  out.trim();
  return out;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < out.c_.size(); ++i)
    out.c_[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  out.trim();
  return out;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a,
                                            const UniPoly& b) {
  if (b.is_zero()) throw UsageError("UniPoly: division by zero");
  UniPoly q, r = a;
  if (a.degree() < b.degree()) return {q, r};
  q.c_.assign(a.degree() - b.degree() + 1, Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational factor = r.leading() / b.leading();
    q.c_[shift] = factor;
    for (int i = 0; i <= b.degree(); ++i)
      r.c_[i + shift] -= factor * b.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw UsageError("UniPoly: division was not exact");
  return q;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw UsageError("UniPoly: monic of the zero polynomial");
  UniPoly out = *this;
  const Rational lead = out.leading();
  for (auto& x : out.c_) x /= lead;
  return out;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational v(0);
  for (int i = degree(); i >= 0; --i) v = v * x + c_[i];
  return v;
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[i];
    if (a == 0) continue;
    Rational mag = rational_abs(a);
    if (s.empty()) {
      if (a < 0) s += "-";
    } else {
      s += a < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1);
    if (i == 0) {
      s += to_string(mag);
    } else {
      if (!unit) s += to_string(mag) + "*";
      s += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace tropsch

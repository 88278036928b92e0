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

#include "tropsch/rat_func.hpp"

namespace tropsch {

RatFunc::RatFunc(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw UsageError("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly(Rational(1));
    return;
  }
  UniPoly g = UniPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = UniPoly::exact_div(num_, g);
    den_ = UniPoly::exact_div(den_, g);
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    UniPoly unit(lead);
    num_ = UniPoly::exact_div(num_, unit);
    den_ = UniPoly::exact_div(den_, unit);
  }
}

RatFunc RatFunc::t_power(int k) {
  if (k >= 0) return RatFunc(UniPoly::t_power(k));
  return RatFunc(UniPoly(Rational(1)), UniPoly::t_power(-k));
}

Rational RatFunc::as_rational() const {
  if (!is_constant()) throw UsageError("RatFunc: element is not constant");
  return num_.coeff(0) / den_.coeff(0);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw UsageError("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw UsageError("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

std::string RatFunc::str() const {
  if (den_.degree() == 0) return num_.str();
  std::string n = num_.str();
  if (num_.degree() > 0) n = "(" + n + ")";
  return n + "/(" + den_.str() + ")";
}

TropScalar val(const RatFunc& a, ValMode mode) {
  if (a.is_zero()) return TropScalar::inf();
  if (mode == ValMode::kTrivial) return TropScalar(0L);
  return TropScalar(Rational(a.num().ord() - a.den().ord()));
}

Rational residue(const RatFunc& a, ValMode mode) {
  if (a.is_zero()) throw UsageError("residue: the zero element has no residue");
  if (mode == ValMode::kTrivial) {
    if (!a.is_constant())
      throw UsageError("residue: trivial valuation requires constants");
    return a.as_rational();
  }
  int on = a.num().ord(), od = a.den().ord();
  return a.num().coeff(on) / a.den().coeff(od);
}

}  // namespace tropsch

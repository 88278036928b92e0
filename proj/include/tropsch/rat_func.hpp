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

#pragma once

#include <string>

#include "tropsch/trop_scalar.hpp"
#include "tropsch/unipoly.hpp"

namespace tropsch {

// Element of the field Q(t), kept canonical: gcd(num, den) = 1, den monic,
// zero is 0/1.  The t-adic valuation reads off ord(num) - ord(den).
class RatFunc {
 public:
  RatFunc() : den_(UniPoly(Rational(1))) {}
  RatFunc(const Rational& a) : num_(UniPoly(a)), den_(UniPoly(Rational(1))) {}
  RatFunc(long a) : RatFunc(Rational(a)) {}
  explicit RatFunc(UniPoly num) : num_(std::move(num)), den_(UniPoly(Rational(1))) {}
  RatFunc(UniPoly num, UniPoly den);

  static RatFunc t_power(int k);

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // Requires a constant element.
  Rational as_rational() const;

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  RatFunc inverse() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  UniPoly num_;
  UniPoly den_;
};

// Which valuation the field carries: the t-adic order on Q(t), or the trivial
// valuation on Q (constants only, val = 0 on nonzero elements).
enum class ValMode { kTAdic, kTrivial };

// t-adic order (or 0 under the trivial valuation); inf for the zero element.
TropScalar val(const RatFunc& a, ValMode mode = ValMode::kTAdic);

// Leading coefficient in the residue field Q: the value at t = 0 of
// a * t^(-val(a)).  Rejects the zero element.
Rational residue(const RatFunc& a, ValMode mode = ValMode::kTAdic);

}  // namespace tropsch

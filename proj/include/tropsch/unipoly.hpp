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
#include <utility>
#include <vector>

#include "tropsch/error.hpp"
#include "tropsch/rational.hpp"

namespace tropsch {

// Univariate polynomial in t with exact rational coefficients, stored densely
// with the invariant that the leading stored coefficient is nonzero (the zero
// polynomial is the empty vector).
class UniPoly {
 public:
  UniPoly() = default;  // zero
  explicit UniPoly(const Rational& a) {
    if (a != 0) c_.push_back(a);
  }
  static UniPoly from_coeffs(std::vector<Rational> c);
  static UniPoly t_power(int k, const Rational& a = Rational(1));

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention here.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Order of vanishing at t = 0; rejects the zero polynomial.
  int ord() const;
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  const Rational& leading() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

  // Quotient and remainder; the divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
  // Division known to be exact; rejects a nonzero remainder.
  static UniPoly exact_div(const UniPoly& a, const UniPoly& b);
  // Monic greatest common divisor; gcd(0, 0) = 0.
  static UniPoly gcd(UniPoly a, UniPoly b);

  UniPoly monic() const;
  Rational eval(const Rational& x) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace tropsch

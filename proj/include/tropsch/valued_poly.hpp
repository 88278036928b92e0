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

#include <map>
#include <string>
#include <vector>

#include "tropsch/exponent.hpp"
#include "tropsch/rat_func.hpp"
#include "tropsch/trop_poly.hpp"

namespace tropsch {

// Multivariate polynomial with coefficients in K = Q(t); no stored zero
// coefficients.  Used for ideal generators and recorded ideal elements.
class ValuedPoly {
 public:
  using TermMap = std::map<Exponent, RatFunc, GrevlexGreater>;

  ValuedPoly(Flavor flavor, int nvars) : flavor_(flavor), nvars_(nvars) {}

  // Merges duplicate exponents by addition; zero coefficients are dropped.
  void add_term(const Exponent& u, const RatFunc& c);

  Flavor flavor() const { return flavor_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(const Exponent& u) const;

  friend ValuedPoly operator+(const ValuedPoly& a, const ValuedPoly& b);
  friend ValuedPoly operator-(const ValuedPoly& a, const ValuedPoly& b);
  friend ValuedPoly operator*(const ValuedPoly& a, const ValuedPoly& b);
  ValuedPoly operator-() const;
  friend bool operator==(const ValuedPoly& a, const ValuedPoly& b) {
    return a.flavor_ == b.flavor_ && a.nvars_ == b.nvars_ &&
           a.terms_ == b.terms_;
  }

  // Scalar multiple.
  ValuedPoly scaled(const RatFunc& c) const;

 private:
  Flavor flavor_;
  int nvars_;
  TermMap terms_;
};

// Multivariate polynomial over the residue field Q (initial forms, initial
// space rows); no stored zero coefficients.
class QPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrevlexGreater>;

  QPoly(Flavor flavor, int nvars) : flavor_(flavor), nvars_(nvars) {}

  void add_term(const Exponent& u, const Rational& c);

  Flavor flavor() const { return flavor_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coeff(const Exponent& u) const;

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.flavor_ == b.flavor_ && a.nvars_ == b.nvars_ &&
           a.terms_ == b.terms_;
  }

 private:
  Flavor flavor_;
  int nvars_;
  TermMap terms_;
};

// Term-wise valuation; the zero polynomial maps to the empty tropical
// polynomial.
TropPoly trop_of(const ValuedPoly& f, ValMode mode = ValMode::kTAdic);

// Initial form over the residue field: the terms attaining
// min(val(c_u) + w·u), each with its leading residue.  f must be nonzero.
QPoly initial_form_classical(const ValuedPoly& f,
                             const std::vector<Rational>& w,
                             ValMode mode = ValMode::kTAdic);

int degree(const ValuedPoly& f);
bool is_homogeneous(const ValuedPoly& f);

std::string to_string(const ValuedPoly& f,
                      const std::vector<std::string>& vars);
std::string to_string(const QPoly& f, const std::vector<std::string>& vars);

}  // namespace tropsch

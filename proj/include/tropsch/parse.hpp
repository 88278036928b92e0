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

#include <istream>
#include <string>
#include <vector>

#include "tropsch/pipeline.hpp"

namespace tropsch {

// "p/q" or "p"; exact, no whitespace.
Rational parse_rational(const std::string& text);

// A rational or the word "inf".
TropScalar parse_trop_scalar(const std::string& text);

// Comma-separated rationals.
std::vector<Rational> parse_weights(const std::string& text);

// Tropical polynomial grammar: `inf`, a single term, or `min(t1, t2, ...)`
// where each term is `c + m`, a bare monomial `m` (coefficient 0), or a bare
// rational `c` (constant term).  The bare word `1` is the constant monomial
// with coefficient 0.  Monomials are products like `x0^2*x1`; Laurent flavor
// admits negative exponents.
TropPoly parse_trop_poly(const std::string& text,
                         const std::vector<std::string>& vars, Flavor flavor);

// Polynomial over K = Q(t): sums/products of rationals, `t`, `t^k`,
// variables, and parenthesized subexpressions; division by x-free factors.
ValuedPoly parse_valued_poly(const std::string& text,
                             const std::vector<std::string>& vars,
                             Flavor flavor);

// Coefficient-only expression (no x variables).
RatFunc parse_rat_func(const std::string& text);

// Ideal file:
//   ring: vars=[x0,x1,x2] field=Q(t)     (or field=Q)
//   gen: x0 + x1 + t*x2
// Blank lines and # comments are ignored.
IdealSpec parse_ideal_file(std::istream& in);
IdealSpec parse_ideal_file_path(const std::string& path);

}  // namespace tropsch

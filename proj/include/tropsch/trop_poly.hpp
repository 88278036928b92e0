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
#include "tropsch/trop_scalar.hpp"

namespace tropsch {

// A tropical (Laurent) polynomial: a finitely supported map from exponent
// vectors to finite coefficients.  Missing keys mean coefficient inf, so the
// polynomial "inf" is the empty map; no stored coefficient is ever inf.
// Equality is term-map equality (these are polynomials, not functions).
// Values are immutable after construction apart from add_term; all free
// functions below are pure.
class TropPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrevlexGreater>;

  TropPoly(Flavor flavor, int nvars) : flavor_(flavor), nvars_(nvars) {}

  static TropPoly infinity(Flavor flavor, int nvars) {
    return TropPoly(flavor, nvars);
  }

  // Merges duplicate exponents by min; inf coefficients are ignored.
  void add_term(const Exponent& u, const TropScalar& c);

  Flavor flavor() const { return flavor_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  // Coefficient of u; inf when u is not in the support.
  TropScalar coeff(const Exponent& u) const;

  friend bool operator==(const TropPoly& a, const TropPoly& b) {
    return a.flavor_ == b.flavor_ && a.nvars_ == b.nvars_ &&
           a.terms_ == b.terms_;
  }
  friend bool operator!=(const TropPoly& a, const TropPoly& b) {
    return !(a == b);
  }

 private:
  Flavor flavor_;
  int nvars_;
  TermMap terms_;
};

// A pair of tropical polynomials F ~ G over the same variables.
struct Relation {
  Relation(TropPoly l, TropPoly r);
  TropPoly lhs;
  TropPoly rhs;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

// Key set of the term map, in grevlex-descending order.
std::vector<Exponent> support(const TropPoly& f);

// F with the term at v removed; v must be in the support.
TropPoly delete_term(const TropPoly& f, const Exponent& v);

// {F ~ F_with_v_removed : v in supp(F)}, in term order.
std::vector<Relation> bend_relations(const TropPoly& f);

// min over terms of coeff + w·u; inf for the empty polynomial.  Entries of w
// may be inf; an inf entry paired with a negative exponent is rejected.
TropScalar evaluate(const TropPoly& f, const std::vector<TropScalar>& w);

// Coefficient-wise min.
TropPoly t_poly_add(const TropPoly& f, const TropPoly& g);

// Min-plus convolution.
TropPoly t_poly_mul(const TropPoly& f, const TropPoly& g);

// Restriction of the term map to exponents u with grading·u = d.  An empty
// grading means all-ones.
TropPoly graded_piece(const TropPoly& f, int d,
                      const std::vector<int>& grading = {});

// Max total coordinate sum over the support (Laurent flavor) or max total
// degree (projective).  The support must be nonempty.
int degree(const TropPoly& f);

// Laurent input with nonnegative exponents only; pads every term with the
// power of the coordinate-0 variable that makes all terms the same degree.
TropPoly homogenize(const TropPoly& f);

// Homogenizes both sides and pads the lower-degree side by a power of the
// coordinate-0 variable so both sides reach max(deg lhs, deg rhs).
Relation homogenize_relation(const Relation& r);

// Drops coordinate 0 of every exponent, merging collisions by min.
TropPoly dehomogenize(const TropPoly& f);

// min of x·u over the terms attaining evaluate(f, w); all coefficients of the
// result are 0.  f must be nonempty.
TropPoly initial_form(const TropPoly& f, const std::vector<Rational>& w);

// Each side restricted to the terms attaining min(F(w), G(w)); a side with no
// such term becomes the empty polynomial.
Relation initial_relation(const Relation& r, const std::vector<Rational>& w);

// Exponent substitution u -> A·u for unimodular A (|det A| = 1); Laurent
// flavor only.  Coefficients are unchanged.
TropPoly monomial_change(const TropPoly& f,
                         const std::vector<std::vector<int>>& a);

// Text form following the min(c + m, ...) grammar; see parse.hpp for the
// inverse.  Variable names must match nvars().
std::string to_string(const TropPoly& f, const std::vector<std::string>& vars);
std::string to_string(const Relation& r, const std::vector<std::string>& vars);
std::string monomial_string(const Exponent& u,
                            const std::vector<std::string>& vars);

}  // namespace tropsch

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

#include <functional>
#include <memory>
#include <vector>

#include "tropsch/trop_poly.hpp"
#include "tropsch/valuated_matroid.hpp"

namespace tropsch {

// Per-degree context for the canonical-form operator π on homogeneous
// tropical polynomials.  π(F) is the coefficient-wise least representative of
// F's class in the congruence generated by the bend relations of the degree
// piece; two polynomials are congruent exactly when their π forms agree.
//
// Ground elements that are monomials of the degree piece (loops of the
// matroid) carry no information: π forces their coefficients to inf and
// equivalence ignores them.
//
// Immutable after construction; π calls are pure and safe to run in
// parallel.
class PiContext {
 public:
  PiContext(int degree, ValuatedMatroid matroid);

  int degree() const { return degree_; }
  const ValuatedMatroid& matroid() const { return matroid_; }
  Mask loop_mask() const { return loops_; }
  // False when the circuit-enumeration cap forbids π on this degree piece.
  bool circuits_available() const { return circuits_ok_; }
  // Circuits of the matroid restricted to non-loop elements.
  const std::vector<Mask>& circuits() const;

  // Dense coefficient vectors indexed by the matroid ground set.  Requires a
  // monomial-labelled (realized) matroid; validates homogeneity and degree.
  std::vector<TropScalar> to_dense(const TropPoly& f) const;
  TropPoly from_dense(const std::vector<TropScalar>& v) const;

  // Closure of the non-loop support in the loopless matroid.
  Mask closure_support(const std::vector<TropScalar>& f) const;

  // The shift placing the valuated circuit of (circuit, u) against F: the
  // max over v in C - u of F^v - G^v, computed both by that formula and as
  // the least shift lambda with lambda + G_without_u >= F, and checked equal.
  TropScalar lambda(Mask circuit, int u,
                    const std::vector<TropScalar>& f) const;

  // Canonical form by the circuit-sum definition.
  std::vector<TropScalar> pi_direct(const std::vector<TropScalar>& f) const;
  TropPoly pi_direct(const TropPoly& f) const;

  // Canonical form by the basis/fundamental-circuit formula; the result is
  // checked against pi_direct before it is returned.
  std::vector<TropScalar> pi_fast(const std::vector<TropScalar>& f) const;
  TropPoly pi_fast(const TropPoly& f) const;

  // Congruence test: pi(F) == pi(G).
  bool equiv(const TropPoly& f, const TropPoly& g) const;
  bool equiv_dense(const std::vector<TropScalar>& f,
                   const std::vector<TropScalar>& g) const;

 private:
  void require_circuits() const;
  int degree_;
  ValuatedMatroid matroid_;
  Mask loops_ = 0;
  bool circuits_ok_ = false;
  std::vector<Mask> circuits_;  // non-loop circuits only
};

// Degree-wise congruence test for possibly inhomogeneous polynomials; the
// provider returns the context for each needed degree (throwing if it cannot
// be built).
bool equiv_graded(const std::function<const PiContext&(int)>& context_for,
                  const TropPoly& f, const TropPoly& g);

}  // namespace tropsch

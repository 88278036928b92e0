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
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tropsch/caps.hpp"
#include "tropsch/congruence.hpp"

namespace tropsch {

// A homogeneous ideal presented by generators over the valued field.  The
// pipeline accepts homogeneous input only; Laurent-side questions go through
// homogenize/dehomogenize on the tropical side.
struct IdealSpec {
  std::vector<std::string> vars;  // projective coordinates; vars[0] homogenizes
  ValMode mode = ValMode::kTAdic;
  std::vector<ValuedPoly> gens;   // homogeneous, nonzero

  int nvars() const { return static_cast<int>(vars.size()); }
};

// Everything attached to one degree: the monomial basis, a reduced basis of
// the degree piece, its valuated matroid, and the π context.  Hilbert value
// equals the matroid rank.  Immutable once built; degrees are independent
// units of work.
struct DegreeModel {
  int d = 0;
  std::vector<Exponent> monomials;
  KMatrix reduced;
  long long hilbert = 0;
  ValMode mode = ValMode::kTAdic;
  std::shared_ptr<const PiContext> pi;

  const ValuatedMatroid& matroid() const { return pi->matroid(); }
};

// Validates an ideal description: variable names unique and nonempty,
// generators homogeneous and nonzero over the declared variables (constants
// only under the trivial valuation).
void validate_ideal(const IdealSpec& spec);

// Reduced basis of the degree-d piece (no matroid attached); the building
// block shared by every per-degree operation.
KMatrix degree_piece(const IdealSpec& spec, int d, const Caps& caps = Caps{});

DegreeModel build_degree(const IdealSpec& spec, int d,
                         const Caps& caps = Caps{});

// Hilbert function values |M_d| - dim I_d for 0 <= d <= d_max; degrees are
// computed concurrently.
std::vector<std::pair<int, long long>> hilbert_function(
    const IdealSpec& spec, int d_max, const Caps& caps = Caps{});

// The degree-d piece of the initial degeneration at w: a basis over Q with
// recorded witnesses, plus the (trivially valued) matroid of that space.
struct InitialModel {
  std::vector<QPoly> basis;
  std::vector<ValuedPoly> witnesses;
  std::shared_ptr<const ValuatedMatroid> matroid;  // null iff full space
};
InitialModel initial_degree_model(const IdealSpec& spec,
                                  const std::vector<Rational>& w, int d,
                                  const Caps& caps = Caps{});

// Cross-validation: the matroid of the initial space computed by elimination
// must agree with the combinatorial candidate whose bases minimize
// p(B) - sum of w-weights over B.
struct MatroidCheckReport {
  bool agree = false;
  std::vector<Mask> candidate_bases;    // argmin of the weighted valuation
  std::vector<Mask> elimination_bases;  // bases of the initial-space matroid
};
MatroidCheckReport initial_matroid_check(const DegreeModel& model,
                                         const std::vector<Rational>& w,
                                         const Caps& caps = Caps{});

// Necessary-condition membership check for a candidate point of the tropical
// variety: no element of any degree piece up to d_max may have a one-term
// initial form at w.  FAIL is definitive and carries a witness; PASS only
// certifies membership for principal ideals once d_max reaches the generator
// degree.
struct BendVerdict {
  bool pass = true;
  int checked_up_to = 0;
  bool exact_for_principal = false;
  // On failure: the witness element and its degree.
  std::optional<ValuedPoly> witness;
  int witness_degree = -1;
};
BendVerdict bend_check_point(const IdealSpec& spec,
                             const std::vector<Rational>& w, int d_max,
                             const Caps& caps = Caps{});

// Lazily built per-degree contexts, shared by graded equivalence and the
// command layer.  Thread-safe.
class ModelSet {
 public:
  ModelSet(IdealSpec spec, Caps caps = Caps{});
  const DegreeModel& get(int d) const;
  const IdealSpec& spec() const { return spec_; }
  const Caps& caps() const { return caps_; }

 private:
  IdealSpec spec_;
  Caps caps_;
  mutable std::mutex mu_;
  mutable std::map<int, DegreeModel> models_;
};

// Runs fn(0..n-1) on a bounded worker pool; results must be written to
// per-index slots by the caller.  Exceptions are rethrown in index order.
// TROPSCH_THREADS=1 forces sequential execution.
void parallel_for_indexed(int n, const std::function<void(int)>& fn);

}  // namespace tropsch

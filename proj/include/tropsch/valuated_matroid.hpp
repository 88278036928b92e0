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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tropsch/caps.hpp"
#include "tropsch/kmatrix.hpp"
#include "tropsch/mask.hpp"

namespace tropsch {

// A minimal-support element of the min-plus span, normalized to coefficient 0
// at a chosen element; coefficients indexed by the ground set, inf off the
// support.
struct ValuatedCircuit {
  Mask support = 0;
  std::vector<TropScalar> coeff;
};

struct PluckerReport {
  bool ok = true;
  long long pairs_checked = 0;
  Mask basis_a = 0;
  Mask basis_b = 0;
  int element = -1;
  std::string detail;
};

enum class MatroidProvenance { kRealized, kSynthetic, kRestriction };

// A valuated matroid: a ground set, a rank, and a basis valuation function p
// on rank-subsets satisfying the tropical exchange inequality.  p is exposed
// as a lazily cached oracle; the cache tolerates concurrent readers.  Either
// realized from the degree piece of an ideal (valuations of maximal minors,
// normalized so the minimum over bases is 0) or given by an explicit table.
class ValuatedMatroid {
 public:
  // Ground set = columns of the reduced degree-piece basis; p(B) is the
  // valuation of the complementary maximal minor, normalized.  Rejects a
  // matrix of full column rank (the degree piece is the whole space).
  // var_names, when given, are used for the ground labels.
  static ValuatedMatroid from_ideal_piece(
      const KMatrix& reduced, const Caps& caps = Caps{},
      const std::vector<std::string>* var_names = nullptr);

  // Explicit table of finite basis valuations; absent subsets are inf.
  // With validate set, the exchange axiom is checked exhaustively when the
  // table is small and a violation is rejected.
  static ValuatedMatroid synthetic(
      std::vector<std::string> labels, int rank,
      const std::vector<std::pair<Mask, TropScalar>>& table,
      bool validate = true, const Caps& caps = Caps{});

  int size() const;
  int rank() const;
  MatroidProvenance provenance() const;
  const std::vector<std::string>& labels() const;
  // Ground exponents when realized from monomials; nullptr otherwise.
  const std::vector<Exponent>* exponents() const;
  const Caps& caps() const;

  // Basis valuation; |B| must equal rank().  inf exactly off the bases.
  TropScalar p(Mask basis) const;
  // min p over bases containing A; inf iff A is dependent.
  TropScalar p_extend(Mask subset) const;
  // Additive constant subtracted from raw minor valuations (0 when not
  // realized).
  TropScalar normalization() const;

  bool is_independent(Mask subset) const;
  int rank_of(Mask subset) const;
  Mask closure(Mask subset) const;
  Mask loops() const;

  // All bases, lexicographically ordered; CapError when the enumeration
  // exceeds caps.max_enum.
  std::vector<Mask> bases() const;
  // All circuits (minimal dependent sets), cached after the first call;
  // CapError when the ground exceeds caps.max_circuit_ground.
  const std::vector<Mask>& circuits() const;

  // The unique circuit inside B ∪ {u}; B independent, u in closure(B) - B.
  Mask fundamental_circuit(Mask independent, int u) const;

  // The valuated circuit with support C and coefficient 0 at u.
  ValuatedCircuit valuated_circuit(Mask circuit, int u) const;

  // Whether H lies in the min-plus span of the valuated circuits, decided by
  // residuation.  H is indexed by the ground set.
  bool is_vector(const std::vector<TropScalar>& h) const;

  // A maximal independent subset of E minimizing p_extend(B) + sum of
  // weights over B, computed by exchange descent with a lexicographic-least
  // canonicalization among optima.  Elements of inf weight are never chosen;
  // if every maximal independent subset needs one, UsageError.
  Mask greedy_min_basis(Mask e, const std::vector<TropScalar>& weights) const;

  // Restriction to E: ground E, rank rank_of(E), valuation p_extend.
  ValuatedMatroid restrict(Mask e) const;

  // Tropical exchange axiom check over basis pairs: exhaustive, or sampled
  // via seeded random exchange walks.
  PluckerReport check_plucker(bool exhaustive, std::uint64_t seed = 0,
                              long long max_pairs = 2000) const;

  // Minimizing full basis containing `forced`; used by p_extend and exposed
  // for cross-validation.
  Mask min_basis_containing(Mask forced) const;

  // Opaque shared state; defined in the implementation file.
  struct State;

 private:
  explicit ValuatedMatroid(std::shared_ptr<State> s) : s_(std::move(s)) {}
  std::shared_ptr<State> s_;
};

}  // namespace tropsch

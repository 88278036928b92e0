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

#include <cstdint>
#include <vector>

#include "tropsch/valued_poly.hpp"

namespace tropsch {

// Matrix over K = Q(t) whose columns are labelled by monomials in a fixed
// grevlex-descending order.  Rows coordinatize homogeneous polynomials; the
// matrix is immutable after construction.
class KMatrix {
 public:
  KMatrix(std::vector<Exponent> cols, std::vector<std::vector<RatFunc>> rows);

  int nrows() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return static_cast<int>(cols_.size()); }
  const std::vector<Exponent>& cols() const { return cols_; }
  const std::vector<RatFunc>& row(int i) const { return rows_[i]; }
  const RatFunc& at(int i, int j) const { return rows_[i][j]; }

  bool row_is_zero(int i) const;
  // Number of nonzero rows; equals the rank when the matrix is reduced.
  int nonzero_rows() const;

  // The polynomial carried by a row.
  ValuedPoly row_poly(int i) const;

 private:
  std::vector<Exponent> cols_;
  std::vector<std::vector<RatFunc>> rows_;
};

// All degree-d monomials in nvars projective variables, grevlex descending.
std::vector<Exponent> monomial_basis(int nvars, int d);

// One row per monomial multiple of each generator reaching total degree d;
// columns are monomial_basis(nvars, d).  Generators must be homogeneous,
// nonzero, projective.
KMatrix macaulay_matrix(const std::vector<ValuedPoly>& gens, int d);

// Reduced row-echelon form over K.  Row space and row count are preserved;
// zero rows sink to the bottom; pivots are 1.
KMatrix row_reduce(const KMatrix& m);

// Valuation of the maximal minor on the given columns of a reduced matrix
// (rows = the nonzero rows).  |cols| must equal the rank; inf when the minor
// vanishes.
TropScalar minor_val(const KMatrix& m, const std::vector<int>& col_indices);
TropScalar minor_val(const KMatrix& m, const std::vector<Exponent>& cols);

// Rows form a basis of the right kernel {y : M y = 0}; row count is
// ncols - rank.
KMatrix kernel_basis(const KMatrix& m);

// A basis over Q of the degree piece of the initial degeneration at w: the
// span of the initial forms of the row space.  Every output row is the
// initial form of its recorded witness, an element of the row space.
struct InitialSpace {
  std::vector<QPoly> rows;
  std::vector<ValuedPoly> witnesses;
};
InitialSpace initial_space(const KMatrix& m, const std::vector<Rational>& w,
                           ValMode mode = ValMode::kTAdic);

}  // namespace tropsch

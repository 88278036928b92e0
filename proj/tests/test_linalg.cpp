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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tropsch/parse.hpp"

using namespace tropsch;

namespace {

const std::vector<std::string> kV4 = {"x", "y", "z", "w"};

ValuedPoly vp(const std::string& text, const std::vector<std::string>& vars) {
  return parse_valued_poly(text, vars, Flavor::kProjective);
}

// The running example: I = <x + y + t z, x + y + t^2 w>.
std::vector<ValuedPoly> example_gens() {
  return {vp("x + y + t*z", kV4), vp("x + y + t^2*w", kV4)};
}

KMatrix example_reduced() {
  return row_reduce(macaulay_matrix(example_gens(), 1));
}

RatFunc rf(const std::string& text) { return parse_rat_func(text); }

}  // namespace

TEST_CASE("monomial bases are grevlex descending") {
  auto m1 = monomial_basis(4, 1);
  REQUIRE(m1.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(m1[i][i] == 1);
  auto m2 = monomial_basis(2, 2);
  REQUIRE(m2.size() == 3);
  CHECK(m2[0].entries() == std::vector<int>{2, 0});
  CHECK(m2[1].entries() == std::vector<int>{1, 1});
  CHECK(m2[2].entries() == std::vector<int>{0, 2});
}

TEST_CASE("macaulay matrix assembly") {
  KMatrix m = macaulay_matrix(example_gens(), 1);
  REQUIRE(m.nrows() == 2);
  REQUIRE(m.ncols() == 4);
  CHECK(m.at(0, 0) == rf("1"));
  CHECK(m.at(0, 1) == rf("1"));
  CHECK(m.at(0, 2) == rf("t"));
  CHECK(m.at(0, 3) == rf("0"));
  CHECK(m.at(1, 2) == rf("0"));
  CHECK(m.at(1, 3) == rf("t^2"));

  // Degree-2 multiples of a linear form, columns (x^2, x y, y^2).
  std::vector<std::string> xy = {"x", "y"};
  KMatrix m2 = macaulay_matrix({vp("x + y", xy)}, 2);
  REQUIRE(m2.nrows() == 2);
  REQUIRE(m2.ncols() == 3);
  CHECK(m2.at(0, 0) == rf("1"));
  CHECK(m2.at(0, 1) == rf("1"));
  CHECK(m2.at(0, 2) == rf("0"));
  CHECK(m2.at(1, 1) == rf("1"));
  CHECK(m2.at(1, 2) == rf("1"));

  // Below every generator degree the matrix has no rows.
  KMatrix m0 = macaulay_matrix({vp("x^2 + y^2", xy)}, 1);
  CHECK(m0.nrows() == 0);
  CHECK(m0.ncols() == 2);

  CHECK_THROWS_AS(macaulay_matrix({vp("x + y^2", xy)}, 2), UsageError);
}

TEST_CASE("row reduction") {
  KMatrix r = example_reduced();
  CHECK(r.nonzero_rows() == 2);
  // Pivots normalized to 1, pivot columns x and z.
  CHECK(r.at(0, 0) == rf("1"));
  CHECK(r.at(0, 1) == rf("1"));
  CHECK(r.at(0, 2) == rf("0"));
  CHECK(r.at(0, 3) == rf("t^2"));
  CHECK(r.at(1, 0) == rf("0"));
  CHECK(r.at(1, 1) == rf("0"));
  CHECK(r.at(1, 2) == rf("1"));
  CHECK(r.at(1, 3) == rf("-t"));

  // Zero and identity fixed points.
  std::vector<Exponent> cols = monomial_basis(2, 1);
  KMatrix zero(cols, {{rf("0"), rf("0")}});
  CHECK(row_reduce(zero).nonzero_rows() == 0);
  KMatrix id(cols, {{rf("1"), rf("0")}, {rf("0"), rf("1")}});
  KMatrix idr = row_reduce(id);
  CHECK(idr.at(0, 0) == rf("1"));
  CHECK(idr.at(1, 1) == rf("1"));
  CHECK(idr.at(0, 1) == rf("0"));
}

TEST_CASE("maximal minor valuations") {
  // On the matrix written with an unnormalized second row the {z, w} minor
  // is -t^3.
  std::vector<Exponent> cols = monomial_basis(4, 1);
  KMatrix m(cols, {{rf("1"), rf("1"), rf("0"), rf("t^2")},
                   {rf("0"), rf("0"), rf("t"), rf("-t^2")}});
  CHECK(minor_val(m, std::vector<int>{2, 3}) == TropScalar(3L));
  CHECK(minor_val(m, std::vector<int>{0, 1}) == TropScalar::inf());

  KMatrix id(monomial_basis(2, 1),
             {{rf("1"), rf("0")}, {rf("0"), rf("1")}});
  CHECK(minor_val(id, std::vector<int>{0, 1}) == TropScalar(0L));
  KMatrix diag(monomial_basis(2, 1),
               {{rf("t"), rf("0")}});
  CHECK(minor_val(diag, std::vector<int>{1}) == TropScalar::inf());
  CHECK_THROWS_AS(minor_val(id, std::vector<int>{0}), UsageError);
}

TEST_CASE("kernel basis") {
  KMatrix r = example_reduced();
  KMatrix k = kernel_basis(r);
  REQUIRE(k.nrows() == 2);
  // Rows annihilate the reduced rows.
  for (int i = 0; i < r.nonzero_rows(); ++i) {
    for (int kr = 0; kr < k.nrows(); ++kr) {
      RatFunc dot;
      for (int j = 0; j < r.ncols(); ++j)
        dot = dot + r.at(i, j) * k.at(kr, j);
      CHECK(dot.is_zero());
    }
  }
  // The stated representatives lie in the kernel: (1,-1,0,0), (-t^2,0,t,1).
  auto in_kernel = [&](const std::vector<RatFunc>& v) {
    for (int i = 0; i < r.nonzero_rows(); ++i) {
      RatFunc dot;
      for (int j = 0; j < r.ncols(); ++j) dot = dot + r.at(i, j) * v[j];
      if (!dot.is_zero()) return false;
    }
    return true;
  };
  CHECK(in_kernel({rf("1"), rf("-1"), rf("0"), rf("0")}));
  CHECK(in_kernel({rf("-t^2"), rf("0"), rf("t"), rf("1")}));

  KMatrix id(monomial_basis(2, 1), {{rf("1"), rf("0")}, {rf("0"), rf("1")}});
  CHECK(kernel_basis(id).nrows() == 0);
  KMatrix zero(monomial_basis(2, 1), {});
  CHECK(kernel_basis(zero).nrows() == 2);
}

TEST_CASE("initial space by valuation-adapted elimination") {
  KMatrix r = example_reduced();
  std::vector<Rational> zero4(4, Rational(0));
  InitialSpace space = initial_space(r, zero4);
  REQUIRE(space.rows.size() == 2);
  // The degeneration at w = 0 is span{x + y, z}.
  CHECK(to_string(space.rows[0], kV4) == "x + y");
  CHECK(to_string(space.rows[1], kV4) == "z");

  // Single row: the initial space is the initial form.
  std::vector<std::string> xyz = {"x", "y", "z"};
  KMatrix one = row_reduce(macaulay_matrix({vp("x + y + t*z", xyz)}, 1));
  InitialSpace sp1 =
      initial_space(one, {Rational(0), Rational(0), Rational(-1)});
  REQUIRE(sp1.rows.size() == 1);
  CHECK(to_string(sp1.rows[0], xyz) == "x + y + z");

  // No rows, no output.
  KMatrix zero(monomial_basis(3, 1), {});
  CHECK(initial_space(zero, {Rational(0), Rational(0), Rational(0)})
            .rows.empty());
}

TEST_CASE("initial space invariants on random ideals") {
  // Dimension preservation and witness fidelity.
  oracle::Rng rng(101);
  std::vector<std::string> vars = {"x", "y", "z"};
  for (int trial = 0; trial < 8; ++trial) {
    // Build homogeneous generators of degree 1 and 2 from random data.
    ValuedPoly lin(Flavor::kProjective, 3);
    for (int i = 0; i < 3; ++i) {
      std::vector<int> e(3, 0);
      e[i] = 1;
      if (rng.uniform(0, 3) > 0)
        lin.add_term(Exponent(Flavor::kProjective, e), rng.rat_func(1));
    }
    ValuedPoly quad(Flavor::kProjective, 3);
    for (const Exponent& u : monomial_basis(3, 2))
      if (rng.uniform(0, 2) > 0) quad.add_term(u, rng.rat_func(1));
    std::vector<ValuedPoly> gens;
    if (!lin.is_zero()) gens.push_back(lin);
    if (!quad.is_zero()) gens.push_back(quad);
    if (gens.empty()) continue;
    for (int d = 1; d <= 3; ++d) {
      KMatrix red = row_reduce(macaulay_matrix(gens, d));
      std::vector<Rational> w = {rng.rational(), rng.rational(),
                                 rng.rational()};
      InitialSpace space = initial_space(red, w);
      CHECK(static_cast<int>(space.rows.size()) == red.nonzero_rows());
      // Every output row is the initial form of its recorded witness.
      for (size_t i = 0; i < space.rows.size(); ++i) {
        CHECK(!space.witnesses[i].is_zero());
        CHECK(initial_form_classical(space.witnesses[i], w) == space.rows[i]);
      }
      // Output rows are linearly independent over Q.
      std::vector<std::vector<RatFunc>> dense;
      for (const QPoly& q : space.rows) {
        std::vector<RatFunc> row;
        for (const Exponent& u : red.cols()) row.push_back(RatFunc(q.coeff(u)));
        dense.push_back(std::move(row));
      }
      std::vector<int> all;
      for (int j = 0; j < red.ncols(); ++j) all.push_back(j);
      CHECK(oracle::submatrix_rank(dense, all) ==
            static_cast<int>(space.rows.size()));
    }
  }
}

TEST_CASE("complementary minors agree between the space and its kernel") {
  // minor_val(kernel, B) - minor_val(reduced, complement of B) is a constant
  // over all bases B.
  KMatrix r = example_reduced();
  KMatrix k = kernel_basis(r);
  int m = r.ncols();
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  bool have = false;
  Rational constant;
  for_each_subset(all, k.nrows(), [&](Mask b) {
    std::vector<int> bc = mask_elems(b), comp;
    for (int j = 0; j < m; ++j)
      if (!mask_has(b, j)) comp.push_back(j);
    TropScalar pk = minor_val(k, bc);
    TropScalar pr = minor_val(r, comp);
    CHECK(pk.is_inf() == pr.is_inf());
    if (!pk.is_inf()) {
      Rational diff = pk.value() - pr.value();
      if (!have) {
        constant = diff;
        have = true;
      } else {
        CHECK(diff == constant);
      }
    }
    return true;
  });
  CHECK(have);
}

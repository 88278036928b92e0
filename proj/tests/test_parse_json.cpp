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

#include <sstream>

#include "oracles.hpp"
#include "tropsch/json_io.hpp"
#include "tropsch/parse.hpp"

using namespace tropsch;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("17") == Rational(17));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK(parse_trop_scalar("inf") == TropScalar::inf());
  CHECK(parse_trop_scalar("-2/6") == TropScalar(Rational(-1, 3)));

  try {
    parse_rational("3/");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 3);
  }
}

TEST_CASE("weight vectors") {
  auto w = parse_weights("2,1,3");
  REQUIRE(w.size() == 3);
  CHECK(w[1] == Rational(1));
  CHECK(parse_weights("-1/2, 0").size() == 2);
  CHECK_THROWS_AS(parse_weights("1,,2"), ParseError);
}

TEST_CASE("tropical polynomial grammar") {
  std::vector<std::string> vars = {"x0", "x1"};
  // The bare word 1 is the constant monomial with coefficient 0; bare
  // numbers are constant coefficients.
  TropPoly constant0 = parse_trop_poly("1", vars, Flavor::kProjective);
  CHECK(constant0.coeff(Exponent(Flavor::kProjective, {0, 0})) ==
        TropScalar(0L));
  TropPoly constant2 = parse_trop_poly("2", vars, Flavor::kProjective);
  CHECK(constant2.coeff(Exponent(Flavor::kProjective, {0, 0})) ==
        TropScalar(2L));
  TropPoly explicit1 = parse_trop_poly("1 + 1", vars, Flavor::kProjective);
  CHECK(explicit1.coeff(Exponent(Flavor::kProjective, {0, 0})) ==
        TropScalar(1L));

  TropPoly f =
      parse_trop_poly("min(1/2 + x0*x1, x1^2)", vars, Flavor::kProjective);
  CHECK(f.term_count() == 2);
  CHECK(f.coeff(Exponent(Flavor::kProjective, {1, 1})) ==
        TropScalar(Rational(1, 2)));
  CHECK(f.coeff(Exponent(Flavor::kProjective, {0, 2})) == TropScalar(0L));

  // Duplicate monomials collapse by min.
  TropPoly g = parse_trop_poly("min(x0, 0 + x0)", vars, Flavor::kProjective);
  CHECK(g.term_count() == 1);
  CHECK(g.coeff(Exponent(Flavor::kProjective, {1, 0})) == TropScalar(0L));

  CHECK(parse_trop_poly("inf", vars, Flavor::kProjective).empty());
  CHECK_THROWS_AS(parse_trop_poly("min(x0, x2)", vars, Flavor::kProjective),
                  ParseError);
  CHECK_THROWS_AS(parse_trop_poly("x0^-1", vars, Flavor::kProjective),
                  ParseError);
  CHECK(parse_trop_poly("x0^-1*x1", vars, Flavor::kLaurent)
            .coeff(Exponent(Flavor::kLaurent, {-1, 1})) == TropScalar(0L));

  // Parse of print is the identity.
  oracle::Rng rng(13);
  for (int i = 0; i < 120; ++i) {
    Flavor flavor = i % 2 ? Flavor::kLaurent : Flavor::kProjective;
    TropPoly p = rng.trop_poly(flavor, 2, 5, 3);
    CHECK(parse_trop_poly(to_string(p, vars), vars, flavor) == p);
  }
}

TEST_CASE("generator expression grammar") {
  std::vector<std::string> vars = {"x0", "x1", "x2"};
  ValuedPoly f =
      parse_valued_poly("x0 + x1 + t^2*x2", vars, Flavor::kProjective);
  CHECK(f.coeff(Exponent(Flavor::kProjective, {0, 0, 1})) ==
        parse_rat_func("t^2"));
  ValuedPoly g = parse_valued_poly("(3*t^2-1)/(2*t) * x0 - x1*x0",
                                   vars, Flavor::kProjective);
  CHECK(g.coeff(Exponent(Flavor::kProjective, {1, 0, 0})) ==
        parse_rat_func("(3*t^2-1)/(2*t)"));
  CHECK(g.coeff(Exponent(Flavor::kProjective, {1, 1, 0})) ==
        parse_rat_func("-1"));
  // Cancellation drops terms.
  CHECK(parse_valued_poly("x0 - x0", vars, Flavor::kProjective).is_zero());
  CHECK_THROWS_AS(parse_valued_poly("x0^-2", vars, Flavor::kProjective),
                  ParseError);
  CHECK_THROWS_AS(parse_valued_poly("1/x0", vars, Flavor::kProjective),
                  ParseError);
  CHECK(parse_valued_poly("x0^-2", {"x0"}, Flavor::kLaurent)
            .coeff(Exponent(Flavor::kLaurent, {-2})) ==
        parse_rat_func("1"));
}

TEST_CASE("ideal files") {
  std::stringstream good(
      "# the running example\n"
      "ring: vars=[x0,x1,x2,x3] field=Q(t)\n"
      "gen: x0 + x1 + t*x2\n"
      "\n"
      "gen: x0 + x1 + t^2*x3\n");
  IdealSpec spec = parse_ideal_file(good);
  CHECK(spec.vars.size() == 4);
  CHECK(spec.mode == ValMode::kTAdic);
  CHECK(spec.gens.size() == 2);

  std::stringstream trivial("ring: vars=[a,b] field=Q\ngen: a + 2*b\n");
  CHECK(parse_ideal_file(trivial).mode == ValMode::kTrivial);

  std::stringstream no_ring("gen: x0\n");
  CHECK_THROWS_AS(parse_ideal_file(no_ring), ParseError);
  std::stringstream bad_field("ring: vars=[a] field=R\n");
  CHECK_THROWS_AS(parse_ideal_file(bad_field), ParseError);
  std::stringstream dup_vars("ring: vars=[a,a] field=Q\n");
  CHECK_THROWS_AS(parse_ideal_file(dup_vars), UsageError);
  std::stringstream inhomog(
      "ring: vars=[a,b] field=Q(t)\ngen: a + b^2\n");
  CHECK_THROWS_AS(parse_ideal_file(inhomog), UsageError);
  std::stringstream t_in_trivial("ring: vars=[a,b] field=Q\ngen: a + t*b\n");
  CHECK_THROWS_AS(parse_ideal_file(t_in_trivial), UsageError);
}

TEST_CASE("tropical polynomial JSON round trip") {
  oracle::Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    Flavor flavor = i % 2 ? Flavor::kLaurent : Flavor::kProjective;
    TropPoly p = rng.trop_poly(flavor, 3, 5, 3);
    nlohmann::json j = trop_poly_to_json(p);
    CHECK(trop_poly_from_json(j) == p);
    // Documents re-parse identically.
    CHECK(nlohmann::json::parse(j.dump()) == j);
  }
  nlohmann::json doc = nlohmann::json::parse(
      R"({"flavor":"projective","terms":[{"coef":"1","exp":[0,1,0,0]}]})");
  TropPoly p = trop_poly_from_json(doc);
  CHECK(p.nvars() == 4);
  CHECK(p.coeff(Exponent(Flavor::kProjective, {0, 1, 0, 0})) ==
        TropScalar(1L));
}

TEST_CASE("synthetic matroid JSON round trip") {
  nlohmann::json doc = nlohmann::json::parse(R"({
    "ground": ["e1", "e2", "e3"],
    "rank": 2,
    "p": [{"B": ["e1", "e2"], "val": "0"},
          {"B": ["e1", "e3"], "val": "1/2"},
          {"B": ["e2", "e3"], "val": "0"}]
  })");
  ValuatedMatroid vm = synthetic_matroid_from_json(doc, true);
  CHECK(vm.rank() == 2);
  CHECK(vm.p(3) == TropScalar(0L));
  CHECK(vm.p(5) == TropScalar(Rational(1, 2)));

  // A report document parses back to the same matroid.
  nlohmann::json report = matroid_to_json(vm);
  ValuatedMatroid back = synthetic_matroid_from_json(report, true);
  CHECK(back.rank() == vm.rank());
  CHECK(back.labels() == vm.labels());
  for (Mask b : vm.bases()) CHECK(back.p(b) == vm.p(b));
  CHECK(back.bases() == vm.bases());

  CHECK_THROWS_AS(synthetic_matroid_from_json(
                      nlohmann::json::parse(R"({"ground":["e"],"rank":1})"),
                      true),
                  UsageError);
}

TEST_CASE("realized matroid reports parse as synthetic matroids") {
  std::vector<std::string> vars = {"x", "y", "z", "w"};
  IdealSpec spec;
  spec.vars = vars;
  spec.gens = {parse_valued_poly("x + y + t*z", vars, Flavor::kProjective),
               parse_valued_poly("x + y + t^2*w", vars, Flavor::kProjective)};
  DegreeModel model = build_degree(spec, 1);
  nlohmann::json report = matroid_to_json(model.matroid());
  ValuatedMatroid back = synthetic_matroid_from_json(report, true);
  CHECK(back.rank() == 2);
  for (Mask b : model.matroid().bases())
    CHECK(back.p(b) == model.matroid().p(b));
  // Circuits agree across the realized/synthetic boundary.
  auto a = model.matroid().circuits();
  auto b = back.circuits();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

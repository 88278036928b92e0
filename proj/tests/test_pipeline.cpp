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

#include <cstdlib>

#include "oracles.hpp"
#include "tropsch/parse.hpp"

using namespace tropsch;

namespace {

ValuedPoly vp(const std::string& text, const std::vector<std::string>& vars) {
  return parse_valued_poly(text, vars, Flavor::kProjective);
}

IdealSpec example_spec() {
  IdealSpec spec;
  spec.vars = {"x", "y", "z", "w"};
  spec.gens = {vp("x + y + t*z", spec.vars), vp("x + y + t^2*w", spec.vars)};
  return spec;
}

IdealSpec hyper_spec() {
  IdealSpec spec;
  spec.vars = {"x", "y", "z"};
  spec.gens = {vp("x + y + t*z", spec.vars)};
  return spec;
}

}  // namespace

TEST_CASE("degree model assembly") {
  DegreeModel model = build_degree(example_spec(), 1);
  CHECK(model.hilbert == 2);
  CHECK(model.matroid().rank() == 2);
  CHECK(model.matroid().circuits().size() == 3);

  // Degrees below every generator degree behave like the zero ideal.
  IdealSpec cubic;
  cubic.vars = {"x", "y"};
  cubic.gens = {vp("x^3 + t*y^3", cubic.vars)};
  DegreeModel low = build_degree(cubic, 2);
  CHECK(low.hilbert == 3);
  CHECK(low.matroid().rank() == 3);
  CHECK(low.matroid().circuits().empty());

  // The zero ideal gives the free matroid in every degree.
  IdealSpec zero;
  zero.vars = {"x", "y"};
  DegreeModel free = build_degree(zero, 2);
  CHECK(free.hilbert == 3);
  CHECK(free.matroid().bases().size() == 1);

  // A full degree piece has no matroid.
  IdealSpec full;
  full.vars = {"x", "y"};
  full.gens = {vp("x", full.vars), vp("y", full.vars)};
  CHECK_THROWS_AS(build_degree(full, 1), UsageError);
}

TEST_CASE("hilbert function values") {
  auto hf = hilbert_function(example_spec(), 1);
  REQUIRE(hf.size() == 2);
  CHECK(hf[0] == std::pair<int, long long>{0, 1});
  CHECK(hf[1] == std::pair<int, long long>{1, 2});

  IdealSpec zero;
  zero.vars = {"x", "y"};
  for (auto [d, v] : hilbert_function(zero, 5)) CHECK(v == d + 1);

  IdealSpec principal;
  principal.vars = {"x", "y"};
  principal.gens = {vp("x", principal.vars)};
  for (auto [d, v] : hilbert_function(principal, 5)) {
    if (d >= 0) CHECK(v == 1);
  }
}

TEST_CASE("hilbert function is thread-agnostic") {
  setenv("TROPSCH_THREADS", "1", 1);
  auto seq = hilbert_function(example_spec(), 4);
  setenv("TROPSCH_THREADS", "4", 1);
  auto par = hilbert_function(example_spec(), 4);
  unsetenv("TROPSCH_THREADS");
  CHECK(seq == par);
}

TEST_CASE("initial degree models") {
  std::vector<Rational> zero4(4, Rational(0));
  InitialModel init = initial_degree_model(example_spec(), zero4, 1);
  REQUIRE(init.basis.size() == 2);
  CHECK(to_string(init.basis[0], example_spec().vars) == "x + y");
  CHECK(to_string(init.basis[1], example_spec().vars) == "z");
  REQUIRE(init.matroid);
  CHECK(init.matroid->rank() == 2);
  // The degeneration is trivially valued.
  for (Mask b : init.matroid->bases())
    CHECK(init.matroid->p(b) == TropScalar(0L));

  InitialModel dir = initial_degree_model(
      hyper_spec(), {Rational(0), Rational(0), Rational(-1)}, 1);
  REQUIRE(dir.basis.size() == 1);
  CHECK(to_string(dir.basis[0], hyper_spec().vars) == "x + y + z");

  // Under the trivial valuation with w = 0 the degeneration is the residue
  // reduction of the piece itself.
  IdealSpec triv;
  triv.vars = {"x", "y", "z"};
  triv.mode = ValMode::kTrivial;
  triv.gens = {vp("x + 2*y + z", triv.vars)};
  InitialModel t0 = initial_degree_model(
      triv, {Rational(0), Rational(0), Rational(0)}, 1);
  REQUIRE(t0.basis.size() == 1);
  CHECK(to_string(t0.basis[0], triv.vars) == "x + 2*y + z");
}

TEST_CASE("initial matroid cross-check") {
  DegreeModel model = build_degree(hyper_spec(), 1);
  std::vector<Rational> zero3(3, Rational(0));
  MatroidCheckReport rep = initial_matroid_check(model, zero3);
  CHECK(rep.agree);
  // L-side bases at w = 0: {x,z} and {y,z}.
  CHECK(rep.candidate_bases == std::vector<Mask>{5, 6});

  MatroidCheckReport rep2 = initial_matroid_check(
      model, {Rational(0), Rational(0), Rational(-1)});
  CHECK(rep2.agree);
  CHECK(rep2.candidate_bases == std::vector<Mask>{3, 5, 6});

  IdealSpec triv;
  triv.vars = {"x", "y", "z"};
  triv.mode = ValMode::kTrivial;
  triv.gens = {vp("x + 2*y + z", triv.vars)};
  CHECK(initial_matroid_check(build_degree(triv, 1),
                              {Rational(0), Rational(0), Rational(0)})
            .agree);

  DegreeModel ex = build_degree(example_spec(), 1);
  oracle::Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    std::vector<Rational> w = {rng.rational(), rng.rational(), rng.rational(),
                               rng.rational()};
    CHECK(initial_matroid_check(ex, w).agree);
  }
}

TEST_CASE("bend check for candidate points") {
  IdealSpec spec = hyper_spec();
  BendVerdict v1 = bend_check_point(
      spec, {Rational(0), Rational(0), Rational(-1)}, 2);
  CHECK(v1.pass);
  CHECK(v1.exact_for_principal);

  BendVerdict v2 =
      bend_check_point(spec, {Rational(0), Rational(5), Rational(0)}, 2);
  // x and y cannot tie at w = (0,5,0): the minimum is unique at x.
  CHECK_FALSE(v2.pass);

  BendVerdict v3 =
      bend_check_point(spec, {Rational(0), Rational(0), Rational(5)}, 2);
  CHECK(v3.pass);  // x and y tie

  BendVerdict v4 =
      bend_check_point(spec, {Rational(0), Rational(1), Rational(0)}, 2);
  CHECK_FALSE(v4.pass);
  REQUIRE(v4.witness);
  CHECK(v4.witness_degree == 1);
  // The witness genuinely has a one-term initial form at w.
  QPoly init = initial_form_classical(*v4.witness,
                                      {Rational(0), Rational(1), Rational(0)});
  CHECK(init.is_monomial());
}

TEST_CASE("rank preservation under degeneration") {
  oracle::Rng rng(91);
  for (const IdealSpec& spec : {example_spec(), hyper_spec()}) {
    for (int d = 1; d <= 2; ++d) {
      KMatrix red = degree_piece(spec, d);
      for (int i = 0; i < 12; ++i) {
        std::vector<Rational> w;
        for (int j = 0; j < spec.nvars(); ++j) w.push_back(rng.rational());
        InitialSpace space = initial_space(red, w, spec.mode);
        CHECK(static_cast<int>(space.rows.size()) == red.nonzero_rows());
      }
    }
  }
}

TEST_CASE("caps are enforced") {
  Caps tiny;
  tiny.max_md = 3;
  CHECK_THROWS_AS(build_degree(example_spec(), 1, tiny), CapError);
  Caps small_enum;
  small_enum.max_enum = 2;
  DegreeModel model = build_degree(example_spec(), 1, small_enum);
  CHECK_THROWS_AS(model.matroid().bases(), CapError);
  Caps no_circuits;
  no_circuits.max_circuit_ground = 2;
  DegreeModel m2 = build_degree(example_spec(), 1, no_circuits);
  CHECK_FALSE(m2.pi->circuits_available());
  CHECK_THROWS_AS(
      m2.pi->pi_direct(std::vector<TropScalar>(4, TropScalar(0L))), CapError);
}

TEST_CASE("recorded elements tropicalize compatibly with initial forms") {
  // For rows of the reduced degree piece, the tropical initial form of
  // trop(f) and the classical initial form of f share their support.
  oracle::Rng rng(311);
  for (const IdealSpec& spec : {example_spec(), hyper_spec()}) {
    for (int d = 1; d <= 2; ++d) {
      KMatrix red = degree_piece(spec, d);
      for (int i = 0; i < red.nonzero_rows(); ++i) {
        ValuedPoly f = red.row_poly(i);
        for (int trial = 0; trial < 8; ++trial) {
          std::vector<Rational> w;
          for (int j = 0; j < spec.nvars(); ++j) w.push_back(rng.rational());
          TropPoly trop_side = initial_form(trop_of(f, spec.mode), w);
          QPoly classical = initial_form_classical(f, w, spec.mode);
          std::vector<Exponent> lhs = support(trop_side);
          std::vector<Exponent> rhs;
          for (const auto& [u, c] : classical.terms()) rhs.push_back(u);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("pi contexts tolerate concurrent readers") {
  DegreeModel model = build_degree(example_spec(), 1);
  std::shared_ptr<const PiContext> ctx = model.pi;
  oracle::Rng rng(19);
  std::vector<TropPoly> inputs;
  for (int i = 0; i < 32; ++i)
    inputs.push_back(rng.homogeneous_trop_poly(4, 1, 4));
  std::vector<TropPoly> sequential;
  for (const TropPoly& f : inputs) sequential.push_back(ctx->pi_direct(f));

  DegreeModel fresh = build_degree(example_spec(), 1);  // cold caches
  std::vector<TropPoly> parallel(inputs.size(),
                                 TropPoly(Flavor::kProjective, 4));
  setenv("TROPSCH_THREADS", "8", 1);
  parallel_for_indexed(static_cast<int>(inputs.size()), [&](int i) {
    parallel[i] = fresh.pi->pi_fast(inputs[i]);
  });
  unsetenv("TROPSCH_THREADS");
  for (size_t i = 0; i < inputs.size(); ++i)
    CHECK(parallel[i] == sequential[i]);
}

TEST_CASE("model sets build lazily and cache") {
  ModelSet models(example_spec());
  const DegreeModel& a = models.get(1);
  const DegreeModel& b = models.get(1);
  CHECK(&a == &b);
  CHECK(models.get(2).d == 2);
}

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

// End-to-end acceptance run: one pass/fail line per criterion, nonzero exit
// when any criterion fails.  Every tolerance here is exact rational equality.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include "oracles.hpp"
#include "tropsch/json_io.hpp"
#include "tropsch/parse.hpp"

using namespace tropsch;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

ValuedPoly vp(const std::string& text, const std::vector<std::string>& vars) {
  return parse_valued_poly(text, vars, Flavor::kProjective);
}

TropPoly pp(const std::string& text, const std::vector<std::string>& vars) {
  return parse_trop_poly(text, vars, Flavor::kProjective);
}

TropPoly lp(const std::string& text, const std::vector<std::string>& vars) {
  return parse_trop_poly(text, vars, Flavor::kLaurent);
}

IdealSpec make_spec(std::vector<std::string> vars,
                    std::vector<std::string> gens,
                    ValMode mode = ValMode::kTAdic) {
  IdealSpec spec;
  spec.vars = std::move(vars);
  spec.mode = mode;
  for (const std::string& g : gens)
    spec.gens.push_back(parse_valued_poly(g, spec.vars, Flavor::kProjective));
  return spec;
}

// The corpus: small ideals over at most four projective coordinates, mixed
// t-adic and trivial valuations, one with a loop.
std::vector<std::pair<std::string, IdealSpec>> corpus() {
  std::vector<std::pair<std::string, IdealSpec>> out;
  out.emplace_back("pair-of-lines",
                   make_spec({"x", "y", "z", "w"},
                             {"x + y + t*z", "x + y + t^2*w"}));
  out.emplace_back("single-line", make_spec({"x", "y"}, {"x + y"}));
  out.emplace_back("plane", make_spec({"x", "y", "z"}, {"x + y + t*z"}));
  out.emplace_back("line-and-conic",
                   make_spec({"x", "y", "z"}, {"x + y + z", "x*y + t*z^2"}));
  out.emplace_back("trivial-valuation",
                   make_spec({"x", "y", "z"}, {"x + y + z", "x*y - z^2"},
                             ValMode::kTrivial));
  out.emplace_back("with-loop", make_spec({"x", "y", "z"}, {"x", "y + t*z"}));
  return out;
}

const std::vector<std::string> kV4 = {"x", "y", "z", "w"};
constexpr Mask X = 1, Y = 2, Z = 4, W = 8;

std::string vc_string(const ValuatedMatroid& vm, Mask c) {
  ValuatedCircuit g = vm.valuated_circuit(c, std::countr_zero(c));
  std::string s;
  for (int i : mask_elems(c)) {
    if (!s.empty()) s += ",";
    s += to_string(g.coeff[i]) + "+" + vm.labels()[i];
  }
  return s;
}

void criterion_example_reproduction() {
  auto t0 = std::chrono::steady_clock::now();
  IdealSpec spec = make_spec(kV4, {"x + y + t*z", "x + y + t^2*w"});
  DegreeModel model = build_degree(spec, 1);
  const ValuatedMatroid& vm = model.matroid();
  std::vector<Mask> circuits = vm.circuits();
  require(circuits.size() == 3, "expected three circuits");
  require(circuits[0] == (Z | W) && circuits[1] == (X | Y | Z) &&
              circuits[2] == (X | Y | W),
          "circuit sets are wrong");
  require(vc_string(vm, X | Y | Z) == "0+x,0+y,1+z", "valuated circuit xyz");
  require(vc_string(vm, X | Y | W) == "0+x,0+y,2+w", "valuated circuit xyw");
  require(vc_string(vm, Z | W) == "0+z,1+w", "valuated circuit zw");
  require(model.pi->pi_fast(pp("min(x, 1 + y)", kV4)) ==
              pp("min(x, 1 + y, 2 + z, 3 + w)", kV4),
          "pi(min(x, 1+y))");
  require(model.pi->pi_fast(pp("2 + w", kV4)) == pp("min(1 + z, 2 + w)", kV4),
          "pi(2 + w)");
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  require(elapsed < 1000, "reproduction exceeded one second");
}

void criterion_initial_relation() {
  std::vector<std::string> xyz = {"x", "y", "z"};
  TropPoly f = lp("min(0 + x, 1 + y, 2 + z)", xyz);
  Relation r(f, delete_term(f, Exponent(Flavor::kLaurent, {1, 0, 0})));
  Relation a = initial_relation(r, {Rational(2), Rational(1), Rational(3)});
  require(a.lhs == lp("min(x, y)", xyz) && a.rhs == lp("y", xyz),
          "initial relation at (2,1,3)");
  Relation b = initial_relation(r, {Rational(1), Rational(2), Rational(2)});
  require(b.lhs == lp("x", xyz) && b.rhs.empty(),
          "initial relation at (1,2,2)");
}

void criterion_line_congruence() {
  IdealSpec spec = make_spec({"x", "y"}, {"x + y"});
  DegreeModel model = build_degree(spec, 1);
  const auto& v = spec.vars;
  require(model.pi->equiv(pp("x", v), pp("y", v)), "x ~ y must hold");
  require(!model.pi->equiv(pp("x", v), pp("inf", v)), "x ~ inf must fail");
  require(!model.pi->equiv(pp("y", v), pp("inf", v)), "y ~ inf must fail");
  require(model.pi->pi_direct(pp("x", v)) == pp("min(x, y)", v),
          "pi(x) = min(x, y)");
  require(model.pi->pi_direct(pp("y", v)) == pp("min(x, y)", v),
          "pi(y) = min(x, y)");
}

void criterion_pi_properties() {
  auto t0 = std::chrono::steady_clock::now();
  oracle::Rng rng(2026);
  int total_f = 0;
  for (const auto& [name, spec] : corpus()) {
    for (int d = 1; d <= 3; ++d) {
      DegreeModel model = build_degree(spec, d);
      if (model.matroid().size() > 12) continue;
      const PiContext& ctx = *model.pi;
      int m = ctx.matroid().size();
      for (int trial = 0; trial < 13; ++trial) {
        TropPoly f = rng.homogeneous_trop_poly(spec.nvars(), d, m);
        std::vector<TropScalar> dense = ctx.to_dense(f);
        std::vector<TropScalar> direct = ctx.pi_direct(dense);
        std::vector<TropScalar> fast = ctx.pi_fast(dense);
        require(direct == fast, name + ": fast and direct forms differ");
        for (int i = 0; i < m; ++i)
          if (!mask_has(ctx.loop_mask(), i))
            require(direct[i] <= dense[i], name + ": pi(F) exceeds F");
        require(ctx.pi_direct(direct) == direct, name + ": pi not idempotent");
        Mask supp = 0;
        for (int i = 0; i < m; ++i)
          if (!direct[i].is_inf()) supp |= mask_bit(i);
        require(supp == ctx.closure_support(dense),
                name + ": supp(pi(F)) is not the closure");
        ++total_f;
      }
      // Bend-relation stability for sampled ideal elements.
      for (int s = 0; s < 3; ++s) {
        ValuedPoly f(Flavor::kProjective, spec.nvars());
        for (int i = 0; i < model.reduced.nonzero_rows(); ++i)
          if (rng.uniform(0, 1))
            f = f + model.reduced.row_poly(i).scaled(rng.rat_func(1));
        if (f.is_zero()) continue;
        TropPoly tf = trop_of(f, spec.mode);
        Rational a = rng.rational();
        TropPoly shifted(Flavor::kProjective, spec.nvars());
        for (const auto& [u, c] : tf.terms())
          shifted.add_term(u, TropScalar(Rational(c + a)));
        TropPoly h = rng.homogeneous_trop_poly(spec.nvars(), d, 3);
        for (const Exponent& u : support(shifted)) {
          require(ctx.equiv(t_poly_add(shifted, h),
                            t_poly_add(delete_term(shifted, u), h)),
                  name + ": bend relation not collapsed");
        }
      }
    }
  }
  require(total_f >= 200, "fewer than 200 random polynomials exercised");
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  require(elapsed <= 60, "property suite exceeded 60 seconds");
}

void criterion_axioms() {
  for (const auto& [name, spec] : corpus()) {
    for (int d = 1; d <= 3; ++d) {
      if (binomial_capped(spec.nvars() - 1 + d, d, 12) > 12) continue;
      DegreeModel model = build_degree(spec, d);
      PluckerReport rep = model.matroid().check_plucker(true);
      require(rep.ok, name + ": exchange axiom failed: " + rep.detail);
    }
  }
  std::ifstream in(std::string(TEST_DATA_DIR) + "/u24_violation.json");
  require(static_cast<bool>(in), "missing planted violation data");
  nlohmann::json j;
  in >> j;
  ValuatedMatroid planted = synthetic_matroid_from_json(j, false);
  require(!planted.check_plucker(true).ok,
          "the planted violation went undetected");
}

void criterion_circuit_oracle() {
  for (const auto& [name, spec] : corpus()) {
    for (int d = 1; d <= 3; ++d) {
      if (binomial_capped(spec.nvars() - 1 + d, d, 12) > 12) continue;
      DegreeModel model = build_degree(spec, d);
      const ValuatedMatroid& vm = model.matroid();
      std::vector<Mask> expected = oracle::minimal_supports(model.reduced);
      std::vector<Mask> got = vm.circuits();
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      require(got == expected, name + ": circuits disagree with the scan");
      for (Mask c : got) {
        if (mask_size(c) < 2) continue;  // loop circuits carry no valuation
        std::vector<RatFunc> h = oracle::supported_element(model.reduced, c);
        int u = std::countr_zero(c);
        ValuatedCircuit g = vm.valuated_circuit(c, u);
        TropScalar shift = val(h[u], spec.mode);
        for (int i : mask_elems(c))
          require(g.coeff[i] == ext_sub(val(h[i], spec.mode), shift),
                  name + ": valuated circuit coefficients disagree");
      }
    }
  }
}

void criterion_initial_commutes() {
  oracle::Rng rng(424242);
  int checked = 0;
  while (checked < 500) {
    ValuedPoly f = rng.valued_poly(Flavor::kLaurent, 3, 5, 2);
    if (f.is_zero()) continue;
    std::vector<Rational> w = {rng.rational(), rng.rational(), rng.rational()};
    TropPoly lhs = initial_form(trop_of(f), w);
    QPoly cls = initial_form_classical(f, w);
    ValuedPoly lift(Flavor::kLaurent, 3);
    for (const auto& [u, c] : cls.terms()) lift.add_term(u, RatFunc(c));
    require(lhs == trop_of(lift),
            "initial form does not commute with tropicalization");
    ++checked;
  }
}

void criterion_rank_preservation() {
  oracle::Rng rng(77);
  for (const auto& [name, spec] : corpus()) {
    for (int d = 1; d <= 3; ++d) {
      KMatrix red = degree_piece(spec, d);
      for (int i = 0; i < 50; ++i) {
        std::vector<Rational> w;
        for (int j = 0; j < spec.nvars(); ++j) w.push_back(rng.rational());
        InitialSpace space = initial_space(red, w, spec.mode);
        require(static_cast<int>(space.rows.size()) == red.nonzero_rows(),
                name + ": degeneration changed the dimension");
      }
      // The initial-space matroid agrees with the combinatorial candidate
      // read off the basis valuations.
      if (red.ncols() <= 12 && red.nonzero_rows() < red.ncols()) {
        DegreeModel model = build_degree(spec, d);
        for (int i = 0; i < 5; ++i) {
          std::vector<Rational> w;
          for (int j = 0; j < spec.nvars(); ++j) w.push_back(rng.rational());
          require(initial_matroid_check(model, w).agree,
                  name + ": initial matroid disagreement");
        }
      }
    }
  }
  auto hf = hilbert_function(
      make_spec(kV4, {"x + y + t*z", "x + y + t^2*w"}), 1);
  require(hf[1].second == 2, "HF(1) of the pair of lines must be 2");
  IdealSpec zero;
  zero.vars = {"x", "y"};
  for (auto [d, v] : hilbert_function(zero, 4))
    require(v == d + 1, "HF of the zero ideal in two variables");
}

void criterion_homogenize_round_trip() {
  oracle::Rng rng(99);
  std::vector<std::string> vars = {"x", "y", "z"};
  int done = 0;
  while (done < 100) {
    TropPoly p = rng.trop_poly(Flavor::kLaurent, 3, 6, 3);
    TropPoly nn(Flavor::kLaurent, 3);
    for (const auto& [u, c] : p.terms()) {
      std::vector<int> e = u.entries();
      for (auto& x : e) x = std::abs(x);
      nn.add_term(Exponent(Flavor::kLaurent, std::move(e)), TropScalar(c));
    }
    if (nn.empty()) continue;
    require(dehomogenize(homogenize(nn)) == nn, "round trip failed");
    ++done;
  }
  std::vector<std::string> kX = {"x"};
  std::vector<std::string> kHX = {"x0", "x"};
  Relation r1 = homogenize_relation(Relation(lp("min(x, 0)", kX), lp("x", kX)));
  require(r1.lhs == pp("min(x, x0)", kHX) && r1.rhs == pp("x", kHX),
          "degree-balanced homogenization");
  Relation r2 =
      homogenize_relation(Relation(lp("min(x^2, 1)", kX), lp("x", kX)));
  require(r2.lhs == pp("min(x^2, x0^2)", kHX) && r2.rhs == pp("x*x0", kHX),
          "padding by the homogenizing variable");
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* name;
    std::function<void()> body;
  };
  const Entry entries[] = {
      {1, "running-example reproduction (exact, < 1 s)",
       criterion_example_reproduction},
      {2, "initial forms of relations (exact)", criterion_initial_relation},
      {3, "congruence of a single line", criterion_line_congruence},
      {4, "canonical-form property suite (>= 200 random inputs, <= 60 s)",
       criterion_pi_properties},
      {5, "exchange axioms on the corpus and the planted violation",
       criterion_axioms},
      {6, "circuit and valuated-circuit oracle agreement",
       criterion_circuit_oracle},
      {7, "initial forms commute with tropicalization (500 samples)",
       criterion_initial_commutes},
      {8, "rank and Hilbert preservation under degeneration",
       criterion_rank_preservation},
      {9, "homogenization round trip and degree padding",
       criterion_homogenize_round_trip},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    auto t0 = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      e.body();
    } catch (const std::exception& ex) {
      verdict = "FAIL";
      detail = ex.what();
      ++failures;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << "CRITERION " << e.number << ": " << verdict << " — "
              << e.name << " [" << ms << " ms]";
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}

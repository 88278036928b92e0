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

#include "tropsch/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <thread>

namespace tropsch {

void validate_ideal(const IdealSpec& spec) {
  if (spec.vars.empty()) throw UsageError("ideal: no variables declared");
  std::set<std::string> seen;
  for (const auto& v : spec.vars) {
    if (v.empty()) throw UsageError("ideal: empty variable name");
    if (!seen.insert(v).second)
      throw UsageError("ideal: duplicate variable name '" + v + "'");
  }
  for (const auto& g : spec.gens) {
    if (g.is_zero()) throw UsageError("ideal: zero generator");
    if (g.flavor() != Flavor::kProjective || g.nvars() != spec.nvars())
      throw UsageError("ideal: generator over the wrong variables");
    if (!is_homogeneous(g))
      throw UsageError("ideal: inhomogeneous generator '" +
                       to_string(g, spec.vars) + "'");
    if (spec.mode == ValMode::kTrivial) {
      for (const auto& [u, c] : g.terms())
        if (!c.is_constant())
          throw UsageError(
              "ideal: non-constant coefficient under the trivial valuation");
    }
  }
}

KMatrix degree_piece(const IdealSpec& spec, int d, const Caps& caps) {
  validate_ideal(spec);
  if (d < 0) throw UsageError("degree_piece: negative degree");
  long long md = binomial_capped(spec.nvars() - 1 + d, d, caps.max_md);
  if (md > caps.max_md)
    throw CapError("degree " + std::to_string(d) + ": monomial count exceeds cap " +
                   std::to_string(caps.max_md));
  if (spec.gens.empty())
    return KMatrix(monomial_basis(spec.nvars(), d), {});
  return row_reduce(macaulay_matrix(spec.gens, d));
}

DegreeModel build_degree(const IdealSpec& spec, int d, const Caps& caps) {
  KMatrix red = degree_piece(spec, d, caps);
  int m = red.ncols();
  int rank = red.nonzero_rows();
  if (rank == m)
    throw UsageError("degree " + std::to_string(d) +
                     ": the degree piece is the full space; no matroid");
  ValuatedMatroid vm = ValuatedMatroid::from_ideal_piece(red, caps, &spec.vars);
  DegreeModel model{d, red.cols(), red, m - rank, spec.mode,
                    std::make_shared<const PiContext>(d, std::move(vm))};
  return model;
}

std::vector<std::pair<int, long long>> hilbert_function(const IdealSpec& spec,
                                                        int d_max,
                                                        const Caps& caps) {
  if (d_max < 0) throw UsageError("hilbert_function: negative degree bound");
  std::vector<std::pair<int, long long>> out(d_max + 1);
  parallel_for_indexed(d_max + 1, [&](int d) {
    KMatrix red = degree_piece(spec, d, caps);
    out[d] = {d, red.ncols() - red.nonzero_rows()};
  });
  return out;
}

InitialModel initial_degree_model(const IdealSpec& spec,
                                  const std::vector<Rational>& w, int d,
                                  const Caps& caps) {
  if (static_cast<int>(w.size()) != spec.nvars())
    throw UsageError("initial_degree_model: weight length mismatch");
  KMatrix red = degree_piece(spec, d, caps);
  InitialSpace space = initial_space(red, w, spec.mode);
  InitialModel out;
  out.basis = space.rows;
  out.witnesses = space.witnesses;
  if (static_cast<int>(out.basis.size()) < red.ncols()) {
    // The initial space over Q as a degree piece, under the trivial
    // valuation.
    std::vector<std::vector<RatFunc>> rows;
    for (const QPoly& q : out.basis) {
      std::vector<RatFunc> row(red.ncols());
      for (int j = 0; j < red.ncols(); ++j)
        row[j] = RatFunc(q.coeff(red.cols()[j]));
      rows.push_back(std::move(row));
    }
    KMatrix qmat(red.cols(), std::move(rows));
    out.matroid = std::make_shared<const ValuatedMatroid>(
        ValuatedMatroid::from_ideal_piece(qmat, caps, &spec.vars));
  }
  return out;
}

MatroidCheckReport initial_matroid_check(const DegreeModel& model,
                                         const std::vector<Rational>& w,
                                         const Caps& caps) {
  const ValuatedMatroid& vm = model.matroid();
  MatroidCheckReport rep;
  // Combinatorial candidate: bases minimizing p(B) minus the w-weight of B.
  std::vector<Mask> all = vm.bases();
  bool have = false;
  Rational best(0);
  std::vector<std::pair<Mask, Rational>> scored;
  for (Mask b : all) {
    Rational score = vm.p(b).value();
    for (int i : mask_elems(b))
      score -= weight_dot(model.monomials[i], w);
    scored.emplace_back(b, score);
    if (!have || score < best) {
      best = score;
      have = true;
    }
  }
  for (const auto& [b, score] : scored)
    if (score == best) rep.candidate_bases.push_back(b);
  std::sort(rep.candidate_bases.begin(), rep.candidate_bases.end(),
            mask_lex_less);

  // Ground truth: the matroid of the initial space from the elimination.
  InitialSpace space = initial_space(model.reduced, w, model.mode);
  std::vector<std::vector<RatFunc>> rows;
  for (const QPoly& q : space.rows) {
    std::vector<RatFunc> row(model.reduced.ncols());
    for (int j = 0; j < model.reduced.ncols(); ++j)
      row[j] = RatFunc(q.coeff(model.reduced.cols()[j]));
    rows.push_back(std::move(row));
  }
  KMatrix qmat(model.reduced.cols(), std::move(rows));
  ValuatedMatroid init_vm = ValuatedMatroid::from_ideal_piece(qmat, caps);
  rep.elimination_bases = init_vm.bases();
  std::sort(rep.elimination_bases.begin(), rep.elimination_bases.end(),
            mask_lex_less);

  rep.agree = rep.candidate_bases == rep.elimination_bases;
  return rep;
}

namespace {

// Reduced-row-echelon pass over dense rational rows with combination
// tracking; used to search the initial space for monomials.
struct QRref {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::vector<Rational>> combos;  // over the input rows
};

QRref q_rref(std::vector<std::vector<Rational>> rows) {
  QRref out;
  int n = static_cast<int>(rows.size());
  int nc = n == 0 ? 0 : static_cast<int>(rows[0].size());
  std::vector<std::vector<Rational>> combos(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) combos[i][i] = 1;
  int next = 0;
  for (int col = 0; col < nc && next < n; ++col) {
    int piv = -1;
    for (int r = next; r < n; ++r)
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[next]);
    std::swap(combos[piv], combos[next]);
    Rational lead = rows[next][col];
    for (auto& x : rows[next]) x /= lead;
    for (auto& x : combos[next]) x /= lead;
    for (int r = 0; r < n; ++r) {
      if (r == next || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (int j = 0; j < nc; ++j) rows[r][j] -= f * rows[next][j];
      for (int j = 0; j < n; ++j) combos[r][j] -= f * combos[next][j];
    }
    ++next;
  }
  out.rows = std::move(rows);
  out.combos = std::move(combos);
  return out;
}

}  // namespace

BendVerdict bend_check_point(const IdealSpec& spec,
                             const std::vector<Rational>& w, int d_max,
                             const Caps& caps) {
  if (static_cast<int>(w.size()) != spec.nvars())
    throw UsageError("bend_check_point: weight length mismatch");
  if (d_max < 0) throw UsageError("bend_check_point: negative degree bound");

  struct PerDegree {
    bool fail = false;
    std::optional<ValuedPoly> witness;
  };
  std::vector<PerDegree> results(d_max + 1);

  parallel_for_indexed(d_max + 1, [&](int d) {
    KMatrix red = degree_piece(spec, d, caps);
    if (red.nonzero_rows() == 0) return;
    InitialSpace space = initial_space(red, w, spec.mode);
    std::vector<std::vector<Rational>> dense;
    for (const QPoly& q : space.rows) {
      std::vector<Rational> row(red.ncols(), Rational(0));
      for (int j = 0; j < red.ncols(); ++j) row[j] = q.coeff(red.cols()[j]);
      dense.push_back(std::move(row));
    }
    QRref rr = q_rref(std::move(dense));
    for (size_t i = 0; i < rr.rows.size(); ++i) {
      int nonzero = 0;
      for (const Rational& x : rr.rows[i])
        if (x != 0) ++nonzero;
      if (nonzero != 1) continue;
      // A monomial initial form exists: assemble the witness element of the
      // degree piece whose initial form it is, aligning weights by integral
      // powers of t.
      Rational gamma_ref;
      bool have = false;
      auto row_gamma = [&](const ValuedPoly& f) {
        bool h2 = false;
        Rational g(0);
        for (const auto& [u, c] : f.terms()) {
          Rational v = val(c, spec.mode).value() + weight_dot(u, w);
          if (!h2 || v < g) {
            g = v;
            h2 = true;
          }
        }
        return g;
      };
      for (size_t j = 0; j < rr.combos[i].size(); ++j) {
        if (rr.combos[i][j] == 0) continue;
        Rational g = row_gamma(space.witnesses[j]);
        if (!have || g > gamma_ref) {
          gamma_ref = g;
          have = true;
        }
      }
      ValuedPoly wit(Flavor::kProjective, spec.nvars());
      for (size_t j = 0; j < rr.combos[i].size(); ++j) {
        if (rr.combos[i][j] == 0) continue;
        Rational delta = gamma_ref - row_gamma(space.witnesses[j]);
        if (!is_integer(delta))
          throw std::logic_error("bend_check_point: non-integral shift");
        RatFunc mult =
            RatFunc(rr.combos[i][j]) * RatFunc::t_power(rational_to_int(delta));
        wit = wit + space.witnesses[j].scaled(mult);
      }
      results[d].fail = true;
      results[d].witness = std::move(wit);
      return;
    }
  });

  BendVerdict verdict;
  verdict.checked_up_to = d_max;
  for (int d = 0; d <= d_max; ++d) {
    if (results[d].fail) {
      verdict.pass = false;
      verdict.witness = results[d].witness;
      verdict.witness_degree = d;
      break;
    }
  }
  if (verdict.pass && spec.gens.size() == 1 &&
      d_max >= degree(spec.gens[0]))
    verdict.exact_for_principal = true;
  return verdict;
}

ModelSet::ModelSet(IdealSpec spec, Caps caps)
    : spec_(std::move(spec)), caps_(caps) {
  validate_ideal(spec_);
}

const DegreeModel& ModelSet::get(int d) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = models_.find(d);
    if (it != models_.end()) return it->second;
  }
  DegreeModel model = build_degree(spec_, d, caps_);
  std::lock_guard<std::mutex> lk(mu_);
  auto [it, inserted] = models_.emplace(d, std::move(model));
  return it->second;
}

void parallel_for_indexed(int n, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  unsigned workers = std::min<unsigned>(hw == 0 ? 1 : hw, 8);
  if (const char* env = std::getenv("TROPSCH_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) workers = static_cast<unsigned>(v);
  }
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (int i = 0; i < n; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
}

}  // namespace tropsch

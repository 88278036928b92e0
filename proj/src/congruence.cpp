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

#include "tropsch/congruence.hpp"

#include <map>
#include <set>

namespace tropsch {

PiContext::PiContext(int degree, ValuatedMatroid matroid)
    : degree_(degree), matroid_(std::move(matroid)) {
  loops_ = matroid_.loops();
  try {
    for (Mask c : matroid_.circuits())
      if ((c & loops_) == 0) circuits_.push_back(c);
    circuits_ok_ = true;
  } catch (const CapError&) {
    circuits_ok_ = false;
  }
}

void PiContext::require_circuits() const {
  if (!circuits_ok_)
    throw CapError(
        "pi: circuit enumeration exceeds the configured ground-size cap at "
        "this degree");
}

const std::vector<Mask>& PiContext::circuits() const {
  require_circuits();
  return circuits_;
}

std::vector<TropScalar> PiContext::to_dense(const TropPoly& f) const {
  const std::vector<Exponent>* exps = matroid_.exponents();
  if (!exps)
    throw UsageError("PiContext: the matroid has no monomial ground labels");
  std::map<Exponent, int, GrevlexGreater> index;
  for (size_t i = 0; i < exps->size(); ++i)
    index.emplace((*exps)[i], static_cast<int>(i));
  std::vector<TropScalar> out(matroid_.size(), TropScalar::inf());
  for (const auto& [u, c] : f.terms()) {
    auto it = index.find(u);
    if (it == index.end())
      throw UsageError(
          "PiContext: polynomial is not homogeneous of the context degree");
    out[it->second] = TropScalar(c);
  }
  return out;
}

TropPoly PiContext::from_dense(const std::vector<TropScalar>& v) const {
  const std::vector<Exponent>* exps = matroid_.exponents();
  if (!exps)
    throw UsageError("PiContext: the matroid has no monomial ground labels");
  if (v.size() != exps->size())
    throw UsageError("PiContext: dense vector length mismatch");
  Flavor flavor = exps->empty() ? Flavor::kProjective : (*exps)[0].flavor();
  int nv = exps->empty() ? 0 : (*exps)[0].size();
  TropPoly out(flavor, nv);
  for (size_t i = 0; i < v.size(); ++i) out.add_term((*exps)[i], v[i]);
  return out;
}

namespace {

Mask finite_support(const std::vector<TropScalar>& f) {
  Mask s = 0;
  for (size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_inf()) s |= mask_bit(static_cast<int>(i));
  return s;
}

}  // namespace

Mask PiContext::closure_support(const std::vector<TropScalar>& f) const {
  if (static_cast<int>(f.size()) != matroid_.size())
    throw UsageError("closure_support: dense vector length mismatch");
  Mask supp = finite_support(f) & ~loops_;
  if (supp == 0) return 0;
  return matroid_.closure(supp) & ~loops_;
}

TropScalar PiContext::lambda(Mask circuit, int u,
                             const std::vector<TropScalar>& f) const {
  if (!mask_has(circuit, u)) throw UsageError("lambda: u not in the circuit");
  if (mask_size(circuit) < 2)
    throw UsageError("lambda: the circuit must have at least two elements");
  ValuatedCircuit g = matroid_.valuated_circuit(circuit, u);
  // The max formula over C - u.
  TropScalar by_max;
  bool first = true;
  for (int v : mask_elems(circuit ^ mask_bit(u))) {
    TropScalar d = ext_sub(f[v], g.coeff[v]);
    if (first || d > by_max) by_max = d;
    first = false;
  }
  // The least shift with lambda + G_without_u >= F, scanning every
  // coordinate with inf-aware semantics.
  TropScalar by_residuation;
  bool have = false;
  for (int v = 0; v < matroid_.size(); ++v) {
    if (v == u || g.coeff[v].is_inf()) continue;  // no constraint
    TropScalar need = ext_sub(f[v], g.coeff[v]);
    if (!have || need > by_residuation) by_residuation = need;
    have = true;
  }
  if (!have) throw std::logic_error("lambda: empty constraint set");
  if (by_max != by_residuation)
    throw std::logic_error("lambda: the two defining formulas disagree");
  return by_max;
}

std::vector<TropScalar> PiContext::pi_direct(
    const std::vector<TropScalar>& f) const {
  if (static_cast<int>(f.size()) != matroid_.size())
    throw UsageError("pi: dense vector length mismatch");
  require_circuits();
  std::vector<TropScalar> out(f.size(), TropScalar::inf());
  Mask supp = finite_support(f) & ~loops_;
  if (supp == 0) return out;
  for (int v : mask_elems(supp)) out[v] = f[v];
  for (Mask c : circuits_) {
    for (int u : mask_elems(c)) {
      // Only deletions with C - u inside the support contribute finitely.
      if (((c ^ mask_bit(u)) & ~supp) != 0) continue;
      TropScalar lam = lambda(c, u, f);
      ValuatedCircuit g = matroid_.valuated_circuit(c, u);
      for (int v : mask_elems(c)) out[v] = t_add(out[v], t_mul(lam, g.coeff[v]));
    }
  }
  return out;
}

std::vector<TropScalar> PiContext::pi_fast(
    const std::vector<TropScalar>& f) const {
  if (static_cast<int>(f.size()) != matroid_.size())
    throw UsageError("pi: dense vector length mismatch");
  require_circuits();
  std::vector<TropScalar> out(f.size(), TropScalar::inf());
  Mask supp = finite_support(f) & ~loops_;
  if (supp != 0) {
    Mask closure = closure_support(f);
    // Weight elements off the support (and loops) at inf; the minimizing
    // basis then lies inside the support, matching the limit of arbitrarily
    // large surrogate coefficients.
    std::vector<TropScalar> weights(f.size(), TropScalar::inf());
    for (int i : mask_elems(supp)) weights[i] = f[i];
    Mask basis = matroid_.greedy_min_basis(closure, weights);
    TropScalar pb = matroid_.p_extend(basis);
    for (int u : mask_elems(basis)) out[u] = f[u];
    for (int u : mask_elems(closure & ~basis)) {
      Mask c = matroid_.fundamental_circuit(basis, u);
      TropScalar best;
      bool first = true;
      for (int v : mask_elems(c ^ mask_bit(u))) {
        TropScalar swapped = matroid_.p_extend((basis ^ mask_bit(v)) | mask_bit(u));
        TropScalar cand = t_mul(ext_sub(f[v], swapped), pb);
        if (first || cand > best) best = cand;
        first = false;
      }
      if (first) throw std::logic_error("pi_fast: empty fundamental circuit");
      out[u] = best;
    }
  }
  std::vector<TropScalar> direct = pi_direct(f);
  if (out != direct)
    throw std::logic_error("pi_fast: disagreement with the circuit-sum form");
  return out;
}

TropPoly PiContext::pi_direct(const TropPoly& f) const {
  return from_dense(pi_direct(to_dense(f)));
}

TropPoly PiContext::pi_fast(const TropPoly& f) const {
  return from_dense(pi_fast(to_dense(f)));
}

bool PiContext::equiv_dense(const std::vector<TropScalar>& f,
                            const std::vector<TropScalar>& g) const {
  return pi_direct(f) == pi_direct(g);
}

bool PiContext::equiv(const TropPoly& f, const TropPoly& g) const {
  return equiv_dense(to_dense(f), to_dense(g));
}

bool equiv_graded(const std::function<const PiContext&(int)>& context_for,
                  const TropPoly& f, const TropPoly& g) {
  std::set<int> degrees;
  for (const auto& [u, c] : f.terms()) degrees.insert(u.total());
  for (const auto& [u, c] : g.terms()) degrees.insert(u.total());
  for (int d : degrees) {
    const PiContext& ctx = context_for(d);
    if (!ctx.equiv(graded_piece(f, d), graded_piece(g, d))) return false;
  }
  return true;
}

}  // namespace tropsch

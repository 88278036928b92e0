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

#include "tropsch/valuated_matroid.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>
#include <unordered_map>

namespace tropsch {

struct ValuatedMatroid::State {
  MatroidProvenance kind = MatroidProvenance::kSynthetic;
  int m = 0;
  int r = 0;
  Caps caps;
  std::vector<std::string> labels;
  std::optional<std::vector<Exponent>> exps;

  // Realized from a degree piece.
  std::optional<KMatrix> reduced;
  std::optional<KMatrix> kernel;
  Mask nonpivot = 0;  // a known basis: the free columns of the reduced matrix

  // Synthetic table.
  std::unordered_map<Mask, TropScalar> table;
  std::vector<Mask> synthetic_bases;

  // Restriction.
  std::optional<ValuatedMatroid> parent;
  std::vector<int> elems;

  Mask loops = 0;

  mutable std::mutex maps_mu;
  mutable std::unordered_map<Mask, TropScalar> p_raw_cache;
  mutable std::unordered_map<Mask, int> rank_cache;
  mutable std::unordered_map<Mask, TropScalar> p_ext_cache;
  mutable std::unordered_map<Mask, ValuatedCircuit> vc_cache;

  mutable std::mutex big_mu;
  mutable std::optional<Rational> norm;
  mutable std::optional<std::vector<Mask>> circuits_cache;
};

namespace {

int realized_col_rank(const KMatrix& kernel, Mask a) {
  std::vector<int> cols = mask_elems(a);
  int rows = kernel.nrows();
  int nc = static_cast<int>(cols.size());
  std::vector<std::vector<RatFunc>> w(rows);
  for (int i = 0; i < rows; ++i) {
    w[i].reserve(nc);
    for (int c : cols) w[i].push_back(kernel.at(i, c));
  }
  int rank = 0;
  for (int col = 0; col < nc && rank < rows; ++col) {
    int piv = -1;
    for (int rw = rank; rw < rows; ++rw)
      if (!w[rw][col].is_zero()) {
        piv = rw;
        break;
      }
    if (piv < 0) continue;
    std::swap(w[piv], w[rank]);
    for (int rw = rank + 1; rw < rows; ++rw) {
      if (w[rw][col].is_zero()) continue;
      RatFunc f = w[rw][col] / w[rank][col];
      for (int j = col; j < nc; ++j) w[rw][j] = w[rw][j] - f * w[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::string mask_label_string(const ValuatedMatroid& vm, Mask a) {
  std::string s = "{";
  bool first = true;
  for (int i : mask_elems(a)) {
    if (!first) s += ",";
    s += vm.labels()[i];
    first = false;
  }
  return s + "}";
}

}  // namespace

ValuatedMatroid ValuatedMatroid::from_ideal_piece(
    const KMatrix& input, const Caps& caps,
    const std::vector<std::string>* var_names) {
  KMatrix red = row_reduce(input);
  int m = red.ncols();
  int k = red.nonzero_rows();
  if (m > 63) throw CapError("from_ideal_piece: more than 63 monomials");
  if (k == m)
    throw UsageError(
        "from_ideal_piece: the degree piece is the full space; no valuated "
        "matroid exists");

  auto s = std::make_shared<State>();
  s->kind = MatroidProvenance::kRealized;
  s->m = m;
  s->r = m - k;
  s->caps = caps;
  s->exps = red.cols();
  std::vector<std::string> names;
  if (var_names) {
    names = *var_names;
  } else {
    int nv = m > 0 ? red.cols()[0].size() : 0;
    for (int i = 0; i < nv; ++i) names.push_back("x" + std::to_string(i));
  }
  for (const Exponent& u : red.cols())
    s->labels.push_back(monomial_string(u, names));

  Mask pivots = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < m; ++j)
      if (!red.at(i, j).is_zero()) {
        pivots |= mask_bit(j);
        break;
      }
  }
  s->nonpivot = mask_full(m) & ~pivots;
  s->kernel = kernel_basis(red);
  s->reduced = std::move(red);

  ValuatedMatroid vm(std::move(s));
  Mask loops = 0;
  for (int i = 0; i < m; ++i)
    if (vm.rank_of(mask_bit(i)) == 0) loops |= mask_bit(i);
  vm.s_->loops = loops;
  if (m <= 16) {
    PluckerReport rep = vm.check_plucker(false, 1, 16);
    if (!rep.ok)
      throw std::logic_error(
          "from_ideal_piece: exchange spot-check failed: " + rep.detail);
  }
  return vm;
}

ValuatedMatroid ValuatedMatroid::synthetic(
    std::vector<std::string> labels, int rank,
    const std::vector<std::pair<Mask, TropScalar>>& table, bool validate,
    const Caps& caps) {
  int m = static_cast<int>(labels.size());
  if (m > 63) throw CapError("synthetic: more than 63 ground elements");
  if (rank < 0 || rank > m) throw UsageError("synthetic: rank out of range");
  auto s = std::make_shared<State>();
  s->kind = MatroidProvenance::kSynthetic;
  s->m = m;
  s->r = rank;
  s->caps = caps;
  s->labels = std::move(labels);
  bool any_finite = false;
  for (const auto& [mask, v] : table) {
    if (mask_size(mask) != rank)
      throw UsageError("synthetic: table subset of the wrong size");
    if (mask >= (Mask{1} << m)) throw UsageError("synthetic: bad subset");
    if (v.is_inf()) continue;
    if (!s->table.emplace(mask, v).second)
      throw UsageError("synthetic: duplicate subset in table");
    s->synthetic_bases.push_back(mask);
    any_finite = true;
  }
  if (!any_finite)
    throw UsageError("synthetic: at least one finite basis valuation needed");
  std::sort(s->synthetic_bases.begin(), s->synthetic_bases.end(),
            mask_lex_less);

  ValuatedMatroid vm(std::move(s));
  Mask loops = 0;
  for (int i = 0; i < m; ++i)
    if (vm.rank_of(mask_bit(i)) == 0) loops |= mask_bit(i);
  vm.s_->loops = loops;
  if (validate) {
    long long nb = static_cast<long long>(vm.s_->synthetic_bases.size());
    bool exhaustive = nb * nb <= vm.s_->caps.max_enum;
    PluckerReport rep = vm.check_plucker(exhaustive, 7, 2000);
    if (!rep.ok)
      throw UsageError("synthetic: exchange axiom violated: " + rep.detail);
  }
  return vm;
}

int ValuatedMatroid::size() const { return s_->m; }
int ValuatedMatroid::rank() const { return s_->r; }
MatroidProvenance ValuatedMatroid::provenance() const { return s_->kind; }
const std::vector<std::string>& ValuatedMatroid::labels() const {
  return s_->labels;
}
const std::vector<Exponent>* ValuatedMatroid::exponents() const {
  return s_->exps ? &*s_->exps : nullptr;
}
const Caps& ValuatedMatroid::caps() const { return s_->caps; }
Mask ValuatedMatroid::loops() const { return s_->loops; }

namespace {

// Raw (unnormalized) basis valuation.
TropScalar p_raw(const ValuatedMatroid::State* s, Mask b);

TropScalar p_raw_compute(const ValuatedMatroid::State* s, Mask b) {
  switch (s->kind) {
    case MatroidProvenance::kRealized: {
      std::vector<int> comp;
      for (int j = 0; j < s->m; ++j)
        if (!mask_has(b, j)) comp.push_back(j);
      return minor_val(*s->reduced, comp);
    }
    case MatroidProvenance::kSynthetic: {
      auto it = s->table.find(b);
      return it == s->table.end() ? TropScalar::inf() : it->second;
    }
    case MatroidProvenance::kRestriction: {
      Mask pm = 0;
      for (int i : mask_elems(b)) pm |= mask_bit(s->elems[i]);
      return s->parent->p_extend(pm);
    }
  }
  throw std::logic_error("unreachable");
}

TropScalar p_raw(const ValuatedMatroid::State* s, Mask b) {
  {
    std::lock_guard<std::mutex> lk(s->maps_mu);
    auto it = s->p_raw_cache.find(b);
    if (it != s->p_raw_cache.end()) return it->second;
  }
  TropScalar v = p_raw_compute(s, b);
  std::lock_guard<std::mutex> lk(s->maps_mu);
  s->p_raw_cache.emplace(b, v);
  return v;
}

}  // namespace

int ValuatedMatroid::rank_of(Mask a) const {
  if (a == 0) return 0;
  if (a >= (Mask{1} << s_->m)) throw UsageError("rank_of: bad subset");
  {
    std::lock_guard<std::mutex> lk(s_->maps_mu);
    auto it = s_->rank_cache.find(a);
    if (it != s_->rank_cache.end()) return it->second;
  }
  int rank = 0;
  switch (s_->kind) {
    case MatroidProvenance::kRealized:
      rank = realized_col_rank(*s_->kernel, a);
      break;
    case MatroidProvenance::kSynthetic: {
      for (Mask b : s_->synthetic_bases)
        rank = std::max(rank, mask_size(a & b));
      break;
    }
    case MatroidProvenance::kRestriction: {
      Mask pm = 0;
      for (int i : mask_elems(a)) pm |= mask_bit(s_->elems[i]);
      rank = s_->parent->rank_of(pm);
      break;
    }
  }
  std::lock_guard<std::mutex> lk(s_->maps_mu);
  s_->rank_cache.emplace(a, rank);
  return rank;
}

bool ValuatedMatroid::is_independent(Mask a) const {
  return rank_of(a) == mask_size(a);
}

Mask ValuatedMatroid::closure(Mask a) const {
  int ra = rank_of(a);
  Mask cl = a;
  for (int i = 0; i < s_->m; ++i) {
    if (mask_has(cl, i)) continue;
    if (rank_of(a | mask_bit(i)) == ra) cl |= mask_bit(i);
  }
  return cl;
}

TropScalar ValuatedMatroid::normalization() const {
  if (s_->kind != MatroidProvenance::kRealized) return TropScalar(0L);
  {
    std::lock_guard<std::mutex> lk(s_->big_mu);
    if (s_->norm) return TropScalar(*s_->norm);
  }
  // Exchange descent from the free-column basis; a single-swap local minimum
  // of a valuated matroid's basis valuation is the global minimum.
  Mask b = s_->nonpivot;
  bool improved = true;
  while (improved) {
    improved = false;
    TropScalar cur = p_raw(s_.get(), b);
    for (int u : mask_elems(b)) {
      for (int v = 0; v < s_->m && !improved; ++v) {
        if (mask_has(b, v)) continue;
        Mask b2 = (b ^ mask_bit(u)) | mask_bit(v);
        if (p_raw(s_.get(), b2) < cur) {
          b = b2;
          improved = true;
        }
      }
      if (improved) break;
    }
  }
  Rational n = p_raw(s_.get(), b).value();
  std::lock_guard<std::mutex> lk(s_->big_mu);
  if (!s_->norm) s_->norm = n;
  return TropScalar(*s_->norm);
}

TropScalar ValuatedMatroid::p(Mask b) const {
  if (mask_size(b) != s_->r)
    throw UsageError("p: subset size must equal the rank");
  TropScalar raw = p_raw(s_.get(), b);
  if (raw.is_inf()) return raw;
  if (s_->kind != MatroidProvenance::kRealized) return raw;
  return TropScalar(Rational(raw.value() - normalization().value()));
}

Mask ValuatedMatroid::min_basis_containing(Mask forced) const {
  if (!is_independent(forced))
    throw UsageError("min_basis_containing: the forced set is dependent");
  Mask b = forced;
  for (int i = 0; i < s_->m && mask_size(b) < s_->r; ++i) {
    if (mask_has(b, i)) continue;
    if (rank_of(b | mask_bit(i)) == mask_size(b) + 1) b |= mask_bit(i);
  }
  if (mask_size(b) != s_->r)
    throw std::logic_error("min_basis_containing: completion failed");
  bool improved = true;
  while (improved) {
    improved = false;
    TropScalar cur = p_raw(s_.get(), b);
    for (int u : mask_elems(b & ~forced)) {
      for (int v = 0; v < s_->m && !improved; ++v) {
        if (mask_has(b, v)) continue;
        Mask b2 = (b ^ mask_bit(u)) | mask_bit(v);
        if (p_raw(s_.get(), b2) < cur) {
          b = b2;
          improved = true;
        }
      }
      if (improved) break;
    }
  }
  return b;
}

TropScalar ValuatedMatroid::p_extend(Mask a) const {
  {
    std::lock_guard<std::mutex> lk(s_->maps_mu);
    auto it = s_->p_ext_cache.find(a);
    if (it != s_->p_ext_cache.end()) return it->second;
  }
  TropScalar v = TropScalar::inf();
  if (rank_of(a) == mask_size(a)) v = p(min_basis_containing(a));
  std::lock_guard<std::mutex> lk(s_->maps_mu);
  s_->p_ext_cache.emplace(a, v);
  return v;
}

std::vector<Mask> ValuatedMatroid::bases() const {
  if (s_->kind == MatroidProvenance::kSynthetic) return s_->synthetic_bases;
  long long count = binomial_capped(s_->m, s_->r, s_->caps.max_enum);
  if (count > s_->caps.max_enum)
    throw CapError("bases: enumeration exceeds the configured cap");
  std::vector<int> all(s_->m);
  for (int i = 0; i < s_->m; ++i) all[i] = i;
  std::vector<Mask> out;
  for_each_subset(all, s_->r, [&](Mask b) {
    if (is_independent(b)) out.push_back(b);
    return true;
  });
  return out;
}

const std::vector<Mask>& ValuatedMatroid::circuits() const {
  std::lock_guard<std::mutex> lk(s_->big_mu);
  if (s_->circuits_cache) return *s_->circuits_cache;
  if (s_->m > s_->caps.max_circuit_ground)
    throw CapError("circuits: ground set exceeds the configured cap");
  std::vector<Mask> circ;
  std::vector<int> nonloop;
  for (int i = 0; i < s_->m; ++i) {
    if (mask_has(s_->loops, i))
      circ.push_back(mask_bit(i));
    else
      nonloop.push_back(i);
  }
  for (int sz = 2; sz <= s_->r + 1; ++sz) {
    std::vector<Mask> found;
    for_each_subset(nonloop, sz, [&](Mask a) {
      for (Mask c : circ)
        if ((c & a) == c) return true;
      if (rank_of(a) < sz) found.push_back(a);
      return true;
    });
    circ.insert(circ.end(), found.begin(), found.end());
  }
  s_->circuits_cache = std::move(circ);
  return *s_->circuits_cache;
}

Mask ValuatedMatroid::fundamental_circuit(Mask b, int u) const {
  if (u < 0 || u >= s_->m) throw UsageError("fundamental_circuit: bad element");
  if (mask_has(b, u))
    throw UsageError("fundamental_circuit: element already in the set");
  if (!is_independent(b))
    throw UsageError("fundamental_circuit: the set is dependent");
  if (rank_of(b | mask_bit(u)) != rank_of(b))
    throw UsageError("fundamental_circuit: element is not in the closure");
  Mask c = mask_bit(u);
  for (int v : mask_elems(b)) {
    Mask swapped = (b ^ mask_bit(v)) | mask_bit(u);
    if (is_independent(swapped)) c |= mask_bit(v);
  }
  return c;
}

ValuatedCircuit ValuatedMatroid::valuated_circuit(Mask c, int u) const {
  if (!mask_has(c, u))
    throw UsageError("valuated_circuit: element not in the circuit");
  // Validate that c is a circuit: dependent, all one-element deletions
  // independent.
  if (rank_of(c) != mask_size(c) - 1)
    throw UsageError("valuated_circuit: the set is not a circuit");
  for (int v : mask_elems(c))
    if (!is_independent(c ^ mask_bit(v)))
      throw UsageError("valuated_circuit: the set is not a circuit");

  int base = std::countr_zero(c);
  ValuatedCircuit vc;
  {
    std::lock_guard<std::mutex> lk(s_->maps_mu);
    auto it = s_->vc_cache.find(c);
    if (it != s_->vc_cache.end()) vc = it->second;
  }
  if (vc.support == 0) {
    vc.support = c;
    vc.coeff.assign(s_->m, TropScalar::inf());
    TropScalar pivot = p_extend(c ^ mask_bit(base));
    for (int v : mask_elems(c))
      vc.coeff[v] = ext_sub(p_extend(c ^ mask_bit(v)), pivot);
    std::lock_guard<std::mutex> lk(s_->maps_mu);
    s_->vc_cache.emplace(c, vc);
  }
  if (u == base) return vc;
  // Shift so the coefficient at u becomes 0; valuated circuits with equal
  // support differ by an additive scalar.
  TropScalar at_u = vc.coeff[u];
  ValuatedCircuit out;
  out.support = c;
  out.coeff.assign(s_->m, TropScalar::inf());
  for (int v : mask_elems(c)) out.coeff[v] = ext_sub(vc.coeff[v], at_u);
  return out;
}

bool ValuatedMatroid::is_vector(const std::vector<TropScalar>& h) const {
  if (static_cast<int>(h.size()) != s_->m)
    throw UsageError("is_vector: vector length must match the ground set");
  std::vector<TropScalar> proj(s_->m, TropScalar::inf());
  for (Mask c : circuits()) {
    ValuatedCircuit g = valuated_circuit(c, std::countr_zero(c));
    TropScalar mu;  // largest shift keeping mu + G >= H; inf disables C
    bool first = true;
    for (int v : mask_elems(c)) {
      TropScalar d = ext_sub(h[v], g.coeff[v]);
      if (first || d > mu) mu = d;
      first = false;
    }
    if (mu.is_inf()) continue;
    for (int v : mask_elems(c)) proj[v] = t_add(proj[v], t_mul(mu, g.coeff[v]));
  }
  for (int i = 0; i < s_->m; ++i)
    if (proj[i] != h[i]) return false;
  return true;
}

namespace {

struct WeightedOpt {
  Mask basis = 0;
  TropScalar cost = TropScalar::inf();
};

}  // namespace

// Minimal-cost maximal independent subset of e containing `forced`, over the
// finite-weight elements; exchange descent with first-improvement rule.
static WeightedOpt opt_basis_in(const ValuatedMatroid& vm, Mask e,
                                const std::vector<TropScalar>& weights,
                                Mask forced) {
  int re = vm.rank_of(e);
  Mask finite = 0;
  for (int i : mask_elems(e))
    if (!weights[i].is_inf()) finite |= mask_bit(i);
  if ((forced & ~finite) != 0) return WeightedOpt{};
  Mask b = forced;
  for (int i : mask_elems(finite)) {
    if (mask_size(b) == re) break;
    if (mask_has(b, i)) continue;
    if (vm.rank_of(b | mask_bit(i)) == mask_size(b) + 1) b |= mask_bit(i);
  }
  if (mask_size(b) != re) return WeightedOpt{};  // needs an inf-weight element

  auto cost = [&](Mask x) {
    TropScalar c = vm.p_extend(x);
    for (int i : mask_elems(x)) c = t_mul(c, weights[i]);
    return c;
  };
  TropScalar cur = cost(b);
  bool improved = true;
  while (improved) {
    improved = false;
    for (int u : mask_elems(b & ~forced)) {
      for (int v : mask_elems(finite & ~b)) {
        Mask b2 = (b ^ mask_bit(u)) | mask_bit(v);
        if (!vm.is_independent(b2)) continue;
        TropScalar c2 = cost(b2);
        if (c2 < cur) {
          b = b2;
          cur = c2;
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
  }
  return WeightedOpt{b, cur};
}

Mask ValuatedMatroid::greedy_min_basis(
    Mask e, const std::vector<TropScalar>& weights) const {
  if (static_cast<int>(weights.size()) != s_->m)
    throw UsageError("greedy_min_basis: weight length must match the ground");
  int re = rank_of(e);
  if (re == 0) return 0;
  WeightedOpt best = opt_basis_in(*this, e, weights, 0);
  if (best.cost.is_inf())
    throw UsageError(
        "greedy_min_basis: every maximal independent subset needs an element "
        "of infinite weight");
  // Lexicographic-least optimum in the fixed ground order.
  Mask a = 0;
  for (int i : mask_elems(e)) {
    if (mask_size(a) == re) break;
    if (weights[i].is_inf()) continue;
    Mask cand = a | mask_bit(i);
    if (!is_independent(cand)) continue;
    WeightedOpt with = opt_basis_in(*this, e, weights, cand);
    if (!with.cost.is_inf() && with.cost == best.cost) a = cand;
  }
  if (mask_size(a) != re)
    throw std::logic_error("greedy_min_basis: canonicalization failed");
  return a;
}

ValuatedMatroid ValuatedMatroid::restrict(Mask e) const {
  if (e >= (Mask{1} << s_->m)) throw UsageError("restrict: bad subset");
  auto s = std::make_shared<State>();
  s->kind = MatroidProvenance::kRestriction;
  s->elems = mask_elems(e);
  s->m = static_cast<int>(s->elems.size());
  s->r = rank_of(e);
  s->caps = s_->caps;
  s->parent = *this;
  for (int i : s->elems) s->labels.push_back(s_->labels[i]);
  if (s_->exps) {
    std::vector<Exponent> sub;
    for (int i : s->elems) sub.push_back((*s_->exps)[i]);
    s->exps = std::move(sub);
  }
  ValuatedMatroid vm(std::move(s));
  Mask loops = 0;
  for (int i = 0; i < vm.s_->m; ++i)
    if (vm.rank_of(mask_bit(i)) == 0) loops |= mask_bit(i);
  vm.s_->loops = loops;
  return vm;
}

PluckerReport ValuatedMatroid::check_plucker(bool exhaustive,
                                             std::uint64_t seed,
                                             long long max_pairs) const {
  std::vector<Mask> bs;
  if (exhaustive) {
    bs = bases();
  } else {
    // Collect bases by a seeded random exchange walk.
    std::mt19937_64 rng(seed);
    Mask b = min_basis_containing(0);
    std::set<Mask> seen{b};
    for (int step = 0; step < 256 && static_cast<int>(seen.size()) < 64;
         ++step) {
      std::vector<int> in = mask_elems(b);
      std::vector<int> out;
      for (int i = 0; i < s_->m; ++i)
        if (!mask_has(b, i)) out.push_back(i);
      if (in.empty() || out.empty()) break;
      int u = in[rng() % in.size()];
      int v = out[rng() % out.size()];
      Mask b2 = (b ^ mask_bit(u)) | mask_bit(v);
      if (is_independent(b2)) {
        b = b2;
        seen.insert(b);
      }
    }
    bs.assign(seen.begin(), seen.end());
    std::sort(bs.begin(), bs.end(), mask_lex_less);
  }

  PluckerReport rep;
  auto test_pair = [&](Mask b1, Mask b2) {
    for (int u : mask_elems(b1 & ~b2)) {
      bool found = false;
      TropScalar lhs = t_mul(p(b1), p(b2));
      for (int v : mask_elems(b2 & ~b1)) {
        TropScalar rhs = t_mul(p((b1 ^ mask_bit(u)) | mask_bit(v)),
                               p((b2 ^ mask_bit(v)) | mask_bit(u)));
        if (lhs >= rhs) {
          found = true;
          break;
        }
      }
      if (!found) {
        rep.ok = false;
        rep.basis_a = b1;
        rep.basis_b = b2;
        rep.element = u;
        rep.detail = "no admissible exchange for B=" +
                     mask_label_string(*this, b1) + ", B'=" +
                     mask_label_string(*this, b2) + ", u=" + s_->labels[u];
        return false;
      }
    }
    return true;
  };

  if (exhaustive) {
    for (Mask b1 : bs)
      for (Mask b2 : bs) {
        ++rep.pairs_checked;
        if (!test_pair(b1, b2)) return rep;
      }
  } else {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    long long n = static_cast<long long>(bs.size());
    long long todo = std::min(max_pairs, n * n);
    for (long long i = 0; i < todo; ++i) {
      Mask b1 = bs[rng() % bs.size()];
      Mask b2 = bs[rng() % bs.size()];
      ++rep.pairs_checked;
      if (!test_pair(b1, b2)) return rep;
    }
  }
  return rep;
}

}  // namespace tropsch

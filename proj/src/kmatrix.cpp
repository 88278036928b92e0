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

#include "tropsch/kmatrix.hpp"

#include <algorithm>
#include <optional>

namespace tropsch {

KMatrix::KMatrix(std::vector<Exponent> cols,
                 std::vector<std::vector<RatFunc>> rows)
    : cols_(std::move(cols)), rows_(std::move(rows)) {
  for (size_t i = 1; i < cols_.size(); ++i)
    if (grevlex_cmp(cols_[i - 1], cols_[i]) <= 0)
      throw UsageError("KMatrix: columns must be distinct, grevlex descending");
  for (const auto& r : rows_)
    if (r.size() != cols_.size())
      throw UsageError("KMatrix: row length does not match column labels");
}

bool KMatrix::row_is_zero(int i) const {
  for (const auto& x : rows_[i])
    if (!x.is_zero()) return false;
  return true;
}

int KMatrix::nonzero_rows() const {
  int n = 0;
  for (int i = 0; i < nrows(); ++i)
    if (!row_is_zero(i)) ++n;
  return n;
}

ValuedPoly KMatrix::row_poly(int i) const {
  Flavor flavor = cols_.empty() ? Flavor::kProjective : cols_[0].flavor();
  int nv = cols_.empty() ? 0 : cols_[0].size();
  ValuedPoly p(flavor, nv);
  for (int j = 0; j < ncols(); ++j) p.add_term(cols_[j], rows_[i][j]);
  return p;
}

std::vector<Exponent> monomial_basis(int nvars, int d) {
  if (nvars <= 0) throw UsageError("monomial_basis: need at least one variable");
  if (d < 0) throw UsageError("monomial_basis: negative degree");
  std::vector<Exponent> out;
  std::vector<int> e(nvars, 0);
  // Depth-first enumeration of compositions of d.
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == nvars - 1) {
      e[pos] = rest;
      out.emplace_back(Flavor::kProjective, e);
      e[pos] = 0;
      return;
    }
    for (int k = rest; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, rest - k);
    }
    e[pos] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

KMatrix macaulay_matrix(const std::vector<ValuedPoly>& gens, int d) {
  int nv = -1;
  for (const auto& g : gens) {
    if (g.is_zero()) throw UsageError("macaulay_matrix: zero generator");
    if (g.flavor() != Flavor::kProjective)
      throw UsageError("macaulay_matrix: generators must be projective");
    if (!is_homogeneous(g))
      throw UsageError("macaulay_matrix: inhomogeneous generator");
    if (nv < 0)
      nv = g.nvars();
    else if (g.nvars() != nv)
      throw UsageError("macaulay_matrix: generators over different variables");
  }
  if (nv < 0) throw UsageError("macaulay_matrix: no generators");
  std::vector<Exponent> cols = monomial_basis(nv, d);
  std::map<Exponent, int, GrevlexGreater> col_index;
  for (size_t j = 0; j < cols.size(); ++j)
    col_index.emplace(cols[j], static_cast<int>(j));

  std::vector<std::vector<RatFunc>> rows;
  for (const auto& g : gens) {
    int dg = degree(g);
    if (dg > d) continue;
    for (const Exponent& a : monomial_basis(nv, d - dg)) {
      std::vector<RatFunc> row(cols.size());
      for (const auto& [u, c] : g.terms()) {
        std::vector<int> e(nv);
        for (int i = 0; i < nv; ++i) e[i] = a[i] + u[i];
        row[col_index.at(Exponent(Flavor::kProjective, std::move(e)))] = c;
      }
      rows.push_back(std::move(row));
    }
  }
  return KMatrix(std::move(cols), std::move(rows));
}

KMatrix row_reduce(const KMatrix& m) {
  std::vector<std::vector<RatFunc>> rows;
  rows.reserve(m.nrows());
  for (int i = 0; i < m.nrows(); ++i) rows.push_back(m.row(i));

  int next = 0;
  for (int col = 0; col < m.ncols() && next < m.nrows(); ++col) {
    int piv = -1;
    for (int r = next; r < m.nrows(); ++r)
      if (!rows[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[next]);
    RatFunc inv = rows[next][col].inverse();
    for (int j = col; j < m.ncols(); ++j)
      rows[next][j] = rows[next][j] * inv;
    for (int r = 0; r < m.nrows(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      RatFunc factor = rows[r][col];
      for (int j = col; j < m.ncols(); ++j)
        rows[r][j] = rows[r][j] - factor * rows[next][j];
    }
    ++next;
  }
  return KMatrix(m.cols(), std::move(rows));
}

namespace {

// Determinant of a square RatFunc matrix: rows are cleared to Q[t] and the
// result tracked through fraction-free (Bareiss) elimination.  Only the
// valuation is consumed downstream, so signs are not tracked.
std::optional<int> det_ord(std::vector<std::vector<RatFunc>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 0;
  long shift = 0;  // ord of the product of row-clearing factors
  std::vector<std::vector<UniPoly>> b(n, std::vector<UniPoly>(n));
  for (int i = 0; i < n; ++i) {
    UniPoly lcm(Rational(1));
    for (int j = 0; j < n; ++j) {
      const UniPoly& d = a[i][j].den();
      lcm = UniPoly::exact_div(lcm * d, UniPoly::gcd(lcm, d));
    }
    shift += lcm.ord();
    for (int j = 0; j < n; ++j) {
      const RatFunc& x = a[i][j];
      b[i][j] = x.num() * UniPoly::exact_div(lcm, x.den());
    }
  }
  UniPoly prev(Rational(1));
  for (int k = 0; k < n - 1; ++k) {
    if (b[k][k].is_zero()) {
      int sw = -1;
      for (int r = k + 1; r < n; ++r)
        if (!b[r][k].is_zero()) {
          sw = r;
          break;
        }
      if (sw < 0) return std::nullopt;  // a zero column block: det = 0
      std::swap(b[k], b[sw]);
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        b[i][j] =
            UniPoly::exact_div(b[i][j] * b[k][k] - b[i][k] * b[k][j], prev);
      b[i][k] = UniPoly();
    }
    prev = b[k][k];
  }
  if (b[n - 1][n - 1].is_zero()) return std::nullopt;
  return static_cast<int>(b[n - 1][n - 1].ord() - shift);
}

}  // namespace

TropScalar minor_val(const KMatrix& m, const std::vector<int>& col_indices) {
  int rank = m.nonzero_rows();
  if (static_cast<int>(col_indices.size()) != rank)
    throw UsageError("minor_val: column count must equal the rank");
  std::vector<int> live;
  for (int i = 0; i < m.nrows(); ++i)
    if (!m.row_is_zero(i)) live.push_back(i);
  std::vector<std::vector<RatFunc>> sq(rank, std::vector<RatFunc>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      int cj = col_indices[j];
      if (cj < 0 || cj >= m.ncols())
        throw UsageError("minor_val: column index out of range");
      sq[i][j] = m.at(live[i], cj);
    }
  auto o = det_ord(std::move(sq));
  if (!o) return TropScalar::inf();
  return TropScalar(Rational(*o));
}

TropScalar minor_val(const KMatrix& m, const std::vector<Exponent>& cols) {
  std::vector<int> idx;
  for (const Exponent& u : cols) {
    int found = -1;
    for (int j = 0; j < m.ncols(); ++j)
      if (m.cols()[j] == u) {
        found = j;
        break;
      }
    if (found < 0) throw UsageError("minor_val: unknown column label");
    idx.push_back(found);
  }
  return minor_val(m, idx);
}

KMatrix kernel_basis(const KMatrix& m) {
  KMatrix r = row_reduce(m);
  int rank = r.nonzero_rows();
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(r.ncols(), false);
  for (int i = 0; i < rank; ++i) {
    int p = -1;
    for (int j = 0; j < r.ncols(); ++j)
      if (!r.at(i, j).is_zero()) {
        p = j;
        break;
      }
    pivot_col.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<std::vector<RatFunc>> out;
  for (int f = 0; f < r.ncols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<RatFunc> v(r.ncols());
    v[f] = RatFunc(Rational(1));
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -r.at(i, f);
    out.push_back(std::move(v));
  }
  return KMatrix(r.cols(), std::move(out));
}

namespace {

struct WorkRow {
  std::vector<RatFunc> v;
  bool zero() const {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
};

Rational row_gamma(const WorkRow& f, const std::vector<Exponent>& cols,
                   const std::vector<Rational>& w, ValMode mode, int* lead) {
  bool have = false;
  Rational best(0);
  int lead_col = -1;
  for (size_t j = 0; j < f.v.size(); ++j) {
    if (f.v[j].is_zero()) continue;
    Rational g = val(f.v[j], mode).value() + weight_dot(cols[j], w);
    if (!have || g < best) {
      best = g;
      have = true;
      lead_col = static_cast<int>(j);
    }
  }
  if (lead) *lead = lead_col;
  return best;
}

std::vector<Rational> initial_vec(const WorkRow& f,
                                  const std::vector<Exponent>& cols,
                                  const std::vector<Rational>& w,
                                  const Rational& gamma, ValMode mode) {
  std::vector<Rational> n(f.v.size(), Rational(0));
  for (size_t j = 0; j < f.v.size(); ++j) {
    if (f.v[j].is_zero()) continue;
    if (val(f.v[j], mode).value() + weight_dot(cols[j], w) == gamma)
      n[j] = residue(f.v[j], mode);
  }
  return n;
}

}  // namespace

InitialSpace initial_space(const KMatrix& m, const std::vector<Rational>& w,
                           ValMode mode) {
  KMatrix r = row_reduce(m);
  if (!r.cols().empty() &&
      static_cast<int>(w.size()) != r.cols()[0].size())
    throw UsageError("initial_space: weight length does not match variables");
  const std::vector<Exponent>& cols = r.cols();
  int rank = r.nonzero_rows();

  std::vector<WorkRow> work;
  for (int i = 0; i < rank; ++i) work.push_back(WorkRow{r.row(i)});

  struct Processed {
    std::vector<Rational> init;  // the initial form of the witness
    Rational gamma;
    WorkRow witness;
  };
  std::vector<Processed> done;
  // Reduction structure over the processed initial forms: each entry is a
  // combination of processed rows, normalized so that entry[pivot] == 1.
  struct RRow {
    std::vector<Rational> v;
    int pivot;
    std::vector<Rational> combo;  // coefficients over `done` indices
  };
  std::vector<RRow> rref;

  long guard = 0;
  while (!work.empty()) {
    if (++guard > 100000)
      throw std::logic_error("initial_space: elimination did not terminate");
    // Take the work row with minimal weight, ties by leading column.
    size_t best = 0;
    Rational bg;
    int bl = -1;
    for (size_t i = 0; i < work.size(); ++i) {
      int lead;
      Rational g = row_gamma(work[i], cols, w, mode, &lead);
      if (i == 0 || g < bg || (g == bg && lead < bl)) {
        best = i;
        bg = g;
        bl = lead;
      }
    }
    WorkRow f = std::move(work[best]);
    work.erase(work.begin() + best);

    for (;;) {
      if (++guard > 100000)
        throw std::logic_error("initial_space: elimination did not terminate");
      int lead;
      Rational gamma = row_gamma(f, cols, w, mode, &lead);
      std::vector<Rational> n = initial_vec(f, cols, w, gamma, mode);
      std::vector<Rational> comb(done.size(), Rational(0));
      for (const RRow& rr : rref) {
        if (n[rr.pivot] == 0) continue;
        Rational factor = n[rr.pivot];
        for (size_t j = 0; j < n.size(); ++j) n[j] -= factor * rr.v[j];
        for (size_t j = 0; j < rr.combo.size(); ++j)
          comb[j] += factor * rr.combo[j];
      }
      bool zero = true;
      int pivot = -1;
      for (size_t j = 0; j < n.size(); ++j)
        if (n[j] != 0) {
          zero = false;
          pivot = static_cast<int>(j);
          break;
        }
      if (!zero) {
        // Independent initial form: record witness and extend the reducer.
        std::vector<Rational> init = initial_vec(f, cols, w, gamma, mode);
        std::vector<Rational> combo(done.size() + 1, Rational(0));
        for (size_t j = 0; j < comb.size(); ++j) combo[j] = -comb[j];
        combo[done.size()] = Rational(1);
        Rational scale = n[pivot];
        for (auto& x : n) x /= scale;
        for (auto& x : combo) x /= scale;
        done.push_back(Processed{std::move(init), gamma, std::move(f)});
        rref.push_back(RRow{std::move(n), pivot, std::move(combo)});
        break;
      }
      // The initial form is a combination of processed ones; cancel it by
      // the matching element of the row space and retry at a larger weight.
      for (size_t i = 0; i < comb.size(); ++i) {
        if (comb[i] == 0) continue;
        Rational delta = gamma - done[i].gamma;
        if (!is_integer(delta))
          throw std::logic_error("initial_space: non-integral weight shift");
        if (mode == ValMode::kTrivial && delta != 0)
          throw std::logic_error("initial_space: shift under trivial valuation");
        RatFunc mult = RatFunc(comb[i]) * RatFunc::t_power(rational_to_int(delta));
        for (size_t j = 0; j < f.v.size(); ++j)
          f.v[j] = f.v[j] - mult * done[i].witness.v[j];
      }
      if (f.zero())
        throw std::logic_error("initial_space: row vanished during reduction");
    }
  }

  InitialSpace out;
  Flavor flavor = cols.empty() ? Flavor::kProjective : cols[0].flavor();
  int nv = cols.empty() ? 0 : cols[0].size();
  for (const Processed& p : done) {
    QPoly q(flavor, nv);
    for (size_t j = 0; j < p.init.size(); ++j) q.add_term(cols[j], p.init[j]);
    out.rows.push_back(std::move(q));
    ValuedPoly wit(flavor, nv);
    for (size_t j = 0; j < p.witness.v.size(); ++j)
      wit.add_term(cols[j], p.witness.v[j]);
    out.witnesses.push_back(std::move(wit));
  }
  if (static_cast<int>(out.rows.size()) != rank)
    throw std::logic_error("initial_space: dimension drifted from the rank");
  return out;
}

}  // namespace tropsch

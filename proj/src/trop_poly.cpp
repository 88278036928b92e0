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

#include "tropsch/trop_poly.hpp"

#include <algorithm>
#include <cstdlib>

namespace tropsch {

namespace {

void require_same_shape(const TropPoly& f, const TropPoly& g,
                        const char* what) {
  if (f.flavor() != g.flavor() || f.nvars() != g.nvars())
    throw UsageError(std::string(what) +
                     ": operands must share flavor and variable count");
}

void require_key_shape(const TropPoly& f, const Exponent& u) {
  if (u.flavor() != f.flavor() || u.size() != f.nvars())
    throw UsageError("exponent does not match the polynomial's variables");
}

// Determinant of a small integer matrix by fraction-free elimination over
// rationals; sizes here are tiny.
Rational int_det(const std::vector<std::vector<int>>& a) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw UsageError("monomial_change: matrix must be square");
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
  }
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (int j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
    }
  }
  return det;
}

}  // namespace

void TropPoly::add_term(const Exponent& u, const TropScalar& c) {
  require_key_shape(*this, u);
  if (c.is_inf()) return;
  auto it = terms_.find(u);
  if (it == terms_.end()) {
    terms_.emplace(u, c.value());
  } else if (c.value() < it->second) {
    it->second = c.value();
  }
}

TropScalar TropPoly::coeff(const Exponent& u) const {
  auto it = terms_.find(u);
  if (it == terms_.end()) return TropScalar::inf();
  return TropScalar(it->second);
}

Relation::Relation(TropPoly l, TropPoly r)
    : lhs(std::move(l)), rhs(std::move(r)) {
  if (lhs.flavor() != rhs.flavor() || lhs.nvars() != rhs.nvars())
    throw UsageError("Relation: sides must share flavor and variable count");
}

std::vector<Exponent> support(const TropPoly& f) {
  std::vector<Exponent> out;
  out.reserve(f.terms().size());
  for (const auto& [u, c] : f.terms()) out.push_back(u);
  return out;
}

TropPoly delete_term(const TropPoly& f, const Exponent& v) {
  require_key_shape(f, v);
  if (f.terms().find(v) == f.terms().end())
    throw UsageError("delete_term: exponent is not in the support");
  TropPoly out(f.flavor(), f.nvars());
  for (const auto& [u, c] : f.terms())
    if (u != v) out.add_term(u, TropScalar(c));
  return out;
}

std::vector<Relation> bend_relations(const TropPoly& f) {
  std::vector<Relation> out;
  for (const auto& [u, c] : f.terms()) out.emplace_back(f, delete_term(f, u));
  return out;
}

TropScalar evaluate(const TropPoly& f, const std::vector<TropScalar>& w) {
  if (static_cast<int>(w.size()) != f.nvars())
    throw UsageError("evaluate: weight length does not match variable count");
  TropScalar best = TropScalar::inf();
  for (const auto& [u, c] : f.terms()) {
    TropScalar term(c);
    for (int i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      if (w[i].is_inf()) {
        if (u[i] < 0)
          throw UsageError("evaluate: inf weight with negative exponent");
        term = TropScalar::inf();
        break;
      }
      term = t_mul(term, TropScalar(Rational(w[i].value() * u[i])));
    }
    best = t_add(best, term);
  }
  return best;
}

TropPoly t_poly_add(const TropPoly& f, const TropPoly& g) {
  require_same_shape(f, g, "t_poly_add");
  TropPoly out = f;
  for (const auto& [u, c] : g.terms()) out.add_term(u, TropScalar(c));
  return out;
}

TropPoly t_poly_mul(const TropPoly& f, const TropPoly& g) {
  require_same_shape(f, g, "t_poly_mul");
  TropPoly out(f.flavor(), f.nvars());
  for (const auto& [u, cu] : f.terms()) {
    for (const auto& [v, cv] : g.terms()) {
      std::vector<int> e(u.size());
      for (int i = 0; i < u.size(); ++i) e[i] = u[i] + v[i];
      out.add_term(Exponent(f.flavor(), std::move(e)),
                   TropScalar(Rational(cu + cv)));
    }
  }
  return out;
}

TropPoly graded_piece(const TropPoly& f, int d,
                      const std::vector<int>& grading) {
  if (!grading.empty() && static_cast<int>(grading.size()) != f.nvars())
    throw UsageError("graded_piece: grading length does not match variables");
  TropPoly out(f.flavor(), f.nvars());
  for (const auto& [u, c] : f.terms()) {
    long deg = 0;
    if (grading.empty()) {
      deg = u.total();
    } else {
      for (int i = 0; i < u.size(); ++i)
        deg += static_cast<long>(grading[i]) * u[i];
    }
    if (deg == d) out.add_term(u, TropScalar(c));
  }
  return out;
}

int degree(const TropPoly& f) {
  if (f.empty()) throw UsageError("degree: the empty polynomial has no degree");
  int best = 0;
  bool first = true;
  for (const auto& [u, c] : f.terms()) {
    int t = u.total();
    if (first || t > best) best = t;
    first = false;
  }
  return best;
}

TropPoly homogenize(const TropPoly& f) {
  if (f.flavor() != Flavor::kLaurent)
    throw UsageError("homogenize: input must be a Laurent-flavor polynomial");
  for (const auto& [u, c] : f.terms())
    for (int i = 0; i < u.size(); ++i)
      if (u[i] < 0)
        throw UsageError("homogenize: support must have nonnegative exponents");
  int d = degree(f);
  TropPoly out(Flavor::kProjective, f.nvars() + 1);
  for (const auto& [u, c] : f.terms()) {
    std::vector<int> e(f.nvars() + 1);
    e[0] = d - u.total();
    for (int i = 0; i < u.size(); ++i) e[i + 1] = u[i];
    out.add_term(Exponent(Flavor::kProjective, std::move(e)), TropScalar(c));
  }
  return out;
}

namespace {

// Tropical multiplication by the coordinate-0 variable raised to `k`.
TropPoly pad_x0(const TropPoly& f, int k) {
  if (k == 0) return f;
  TropPoly out(f.flavor(), f.nvars());
  for (const auto& [u, c] : f.terms()) {
    std::vector<int> e = u.entries();
    e[0] += k;
    out.add_term(Exponent(f.flavor(), std::move(e)), TropScalar(c));
  }
  return out;
}

}  // namespace

Relation homogenize_relation(const Relation& r) {
  if (r.lhs.empty() || r.rhs.empty())
    throw UsageError("homogenize_relation: both sides must be nonempty");
  int dl = degree(r.lhs), dr = degree(r.rhs);
  TropPoly hl = homogenize(r.lhs), hr = homogenize(r.rhs);
  if (dl < dr)
    hl = pad_x0(hl, dr - dl);
  else if (dr < dl)
    hr = pad_x0(hr, dl - dr);
  return Relation(std::move(hl), std::move(hr));
}

TropPoly dehomogenize(const TropPoly& f) {
  if (f.flavor() != Flavor::kProjective)
    throw UsageError("dehomogenize: input must be projective");
  TropPoly out(Flavor::kLaurent, f.nvars() - 1);
  for (const auto& [u, c] : f.terms()) {
    std::vector<int> e(u.entries().begin() + 1, u.entries().end());
    out.add_term(Exponent(Flavor::kLaurent, std::move(e)), TropScalar(c));
  }
  return out;
}

TropPoly initial_form(const TropPoly& f, const std::vector<Rational>& w) {
  if (f.empty())
    throw UsageError("initial_form: the empty polynomial has no initial form");
  if (static_cast<int>(w.size()) != f.nvars())
    throw UsageError("initial_form: weight length does not match variables");
  bool have = false;
  Rational best(0);
  for (const auto& [u, c] : f.terms()) {
    Rational v = c + weight_dot(u, w);
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }
  TropPoly out(f.flavor(), f.nvars());
  for (const auto& [u, c] : f.terms())
    if (c + weight_dot(u, w) == best) out.add_term(u, TropScalar(0L));
  return out;
}

Relation initial_relation(const Relation& r, const std::vector<Rational>& w) {
  if (static_cast<int>(w.size()) != r.lhs.nvars())
    throw UsageError("initial_relation: weight length does not match");
  bool have = false;
  Rational gamma(0);
  for (const TropPoly* side : {&r.lhs, &r.rhs}) {
    for (const auto& [u, c] : side->terms()) {
      Rational v = c + weight_dot(u, w);
      if (!have || v < gamma) {
        gamma = v;
        have = true;
      }
    }
  }
  auto cut = [&](const TropPoly& f) {
    TropPoly out(f.flavor(), f.nvars());
    if (!have) return out;
    for (const auto& [u, c] : f.terms())
      if (c + weight_dot(u, w) == gamma) out.add_term(u, TropScalar(0L));
    return out;
  };
  return Relation(cut(r.lhs), cut(r.rhs));
}

TropPoly monomial_change(const TropPoly& f,
                         const std::vector<std::vector<int>>& a) {
  if (f.flavor() != Flavor::kLaurent)
    throw UsageError("monomial_change: Laurent flavor required");
  if (static_cast<int>(a.size()) != f.nvars())
    throw UsageError("monomial_change: matrix size must match variables");
  Rational det = int_det(a);
  if (det != 1 && det != -1)
    throw UsageError("monomial_change: matrix must be unimodular");
  TropPoly out(f.flavor(), f.nvars());
  for (const auto& [u, c] : f.terms()) {
    std::vector<int> e(f.nvars(), 0);
    for (int i = 0; i < f.nvars(); ++i)
      for (int j = 0; j < f.nvars(); ++j) e[i] += a[i][j] * u[j];
    out.add_term(Exponent(Flavor::kLaurent, std::move(e)), TropScalar(c));
  }
  return out;
}

std::string monomial_string(const Exponent& u,
                            const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) != u.size())
    throw UsageError("monomial_string: variable names do not match exponent");
  std::string s;
  for (int i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (u[i] != 1) s += "^" + std::to_string(u[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const TropPoly& f, const std::vector<std::string>& vars) {
  if (f.empty()) return "inf";
  std::vector<std::string> parts;
  for (const auto& [u, c] : f.terms()) {
    if (u.is_zero()) {
      // The bare word "1" denotes the constant monomial with coefficient 0,
      // so a coefficient of exactly 1 needs the explicit form.
      parts.push_back(c == 1 ? "1 + 1" : to_string(c));
    } else if (c == 0) {
      parts.push_back(monomial_string(u, vars));
    } else {
      parts.push_back(to_string(c) + " + " + monomial_string(u, vars));
    }
  }
  if (parts.size() == 1) return parts[0];
  std::string s = "min(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += parts[i];
  }
  return s + ")";
}

std::string to_string(const Relation& r, const std::vector<std::string>& vars) {
  return to_string(r.lhs, vars) + " ~ " + to_string(r.rhs, vars);
}

}  // namespace tropsch

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

#include <numeric>
#include <string>
#include <vector>

#include "tropsch/error.hpp"
#include "tropsch/rational.hpp"

namespace tropsch {

// Laurent exponents live in Z^n; projective exponents live in N^(n+1) with
// coordinate 0 reserved for the homogenizing variable.
enum class Flavor { kLaurent, kProjective };

class Exponent {
 public:
  Exponent(Flavor flavor, std::vector<int> entries)
      : flavor_(flavor), e_(std::move(entries)) {
    if (flavor_ == Flavor::kProjective) {
      for (int v : e_) {
        if (v < 0)
          throw UsageError("Exponent: projective entries must be nonnegative");
      }
    }
  }

  Flavor flavor() const { return flavor_; }
  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  const std::vector<int>& entries() const { return e_; }

  // Sum over all coordinates.
  int total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

  // Sum excluding coordinate 0; the degree bookkeeping used by
  // homogenization, where coordinate 0 is the homogenizing variable.
  int tail_total() const {
    return std::accumulate(e_.begin() + (e_.empty() ? 0 : 1), e_.end(), 0);
  }

  bool is_zero() const {
    for (int v : e_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.flavor_ == b.flavor_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) {
    return !(a == b);
  }

 private:
  Flavor flavor_;
  std::vector<int> e_;
};

// Graded reverse-lexicographic comparison: higher total degree wins; on equal
// degree the vector whose last nonzero difference entry is negative is the
// larger.  Total order on distinct vectors of equal length.  Returns -1, 0,
// or +1 as a <, =, > b.
inline int grevlex_cmp(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size())
    throw UsageError("grevlex_cmp: exponent lengths differ");
  int da = a.total(), db = b.total();
  if (da != db) return da > db ? 1 : -1;
  for (int i = a.size() - 1; i >= 0; --i) {
    int d = a[i] - b[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

// Map comparator placing grevlex-larger exponents first; gives deterministic
// iteration in the order monomials are conventionally listed.
struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    return grevlex_cmp(a, b) > 0;
  }
};

inline Rational weight_dot(const Exponent& u, const std::vector<Rational>& w) {
  if (static_cast<int>(w.size()) != u.size())
    throw UsageError("weight vector length does not match exponent length");
  Rational s(0);
  for (int i = 0; i < u.size(); ++i) s += w[i] * u[i];
  return s;
}

}  // namespace tropsch

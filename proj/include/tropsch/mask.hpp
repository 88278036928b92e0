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

#include <bit>
#include <cstdint>
#include <vector>

namespace tropsch {

// Subsets of a ground set of at most 63 elements, bit i = element i.
using Mask = std::uint64_t;

inline int mask_size(Mask a) { return std::popcount(a); }
inline bool mask_has(Mask a, int i) { return (a >> i) & 1u; }
inline Mask mask_bit(int i) { return Mask{1} << i; }
inline Mask mask_full(int m) { return (m >= 64) ? ~Mask{0} : (Mask{1} << m) - 1; }

inline std::vector<int> mask_elems(Mask a) {
  std::vector<int> out;
  while (a) {
    int i = std::countr_zero(a);
    out.push_back(i);
    a &= a - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& elems) {
  Mask a = 0;
  for (int i : elems) a |= mask_bit(i);
  return a;
}

// Lexicographic order on the sorted element sequences (NOT numeric order on
// the mask words); the deterministic tie-break used throughout.
inline bool mask_lex_less(Mask a, Mask b) {
  while (a && b) {
    int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// binomial(n, k) saturating at a large sentinel to avoid overflow.
inline long long binomial_capped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

// Visits all k-subsets of {0..n-1} restricted to the elements of `universe`,
// in lexicographic order; `fn` returns false to stop early.
template <typename Fn>
void for_each_subset(const std::vector<int>& universe, int k, Fn&& fn) {
  int n = static_cast<int>(universe.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Mask m = 0;
    for (int i : idx) m |= mask_bit(universe[i]);
    if (!fn(m)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace tropsch

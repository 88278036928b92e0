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

#include <string>
#include <utility>

#include "tropsch/error.hpp"
#include "tropsch/rational.hpp"

namespace tropsch {

// Element of the min-plus semiring restricted to Q ∪ {inf}.  Tropical sum is
// min, tropical product is ordinary +.  inf is the additive identity and is
// absorbing for the product.  Values are immutable and exact.
class TropScalar {
 public:
  TropScalar() = default;  // inf
  TropScalar(Rational v) : inf_(false), v_(std::move(v)) {}
  TropScalar(long v) : inf_(false), v_(v) {}
  TropScalar(int v) : inf_(false), v_(v) {}

  static TropScalar inf() { return TropScalar(); }

  bool is_inf() const { return inf_; }

  const Rational& value() const {
    if (inf_) throw UsageError("TropScalar: value() called on inf");
    return v_;
  }

  friend bool operator==(const TropScalar& a, const TropScalar& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const TropScalar& a, const TropScalar& b) {
    return !(a == b);
  }
  // Total order with inf largest.
  friend bool operator<(const TropScalar& a, const TropScalar& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(const TropScalar& a, const TropScalar& b) {
    return b < a;
  }
  friend bool operator<=(const TropScalar& a, const TropScalar& b) {
    return !(b < a);
  }
  friend bool operator>=(const TropScalar& a, const TropScalar& b) {
    return !(a < b);
  }

 private:
  bool inf_ = true;
  Rational v_;
};

// Tropical sum: min(a, b).
inline TropScalar t_add(const TropScalar& a, const TropScalar& b) {
  return a < b ? a : b;
}

// Tropical product: a + b in ordinary arithmetic, inf absorbing.
inline TropScalar t_mul(const TropScalar& a, const TropScalar& b) {
  if (a.is_inf() || b.is_inf()) return TropScalar::inf();
  return TropScalar(Rational(a.value() + b.value()));
}

// Ordinary subtraction a - b with the convention inf - b = inf.  b = inf is
// rejected: the difference is undefined.
inline TropScalar ext_sub(const TropScalar& a, const TropScalar& b) {
  if (b.is_inf()) throw UsageError("ext_sub: subtrahend must be finite");
  if (a.is_inf()) return TropScalar::inf();
  return TropScalar(Rational(a.value() - b.value()));
}

inline std::string to_string(const TropScalar& a) {
  return a.is_inf() ? "inf" : to_string(a.value());
}

}  // namespace tropsch

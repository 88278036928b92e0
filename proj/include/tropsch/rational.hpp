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

#include <gmpxx.h>

#include <string>

#include "tropsch/error.hpp"

namespace tropsch {

// Exact rational scalar. Equality and ordering are exact; no floating point
// appears anywhere in the library.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_abs(const Rational& q) {
  return q < 0 ? Rational(-q) : q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Integral rational to int, range-checked.
inline int rational_to_int(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_sint_p())
    throw UsageError("expected a small integer, got " + q.get_str());
  return static_cast<int>(q.get_num().get_si());
}

}  // namespace tropsch

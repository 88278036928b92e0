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

namespace tropsch {

// Size limits keeping every computation at desk scale.  Exceeding a cap
// raises CapError rather than attempting the computation.
struct Caps {
  int max_md = 35;              // monomials per degree piece
  int max_circuit_ground = 20;  // ground size for circuit enumeration
  long long max_enum = 100000;  // exhaustive basis/subset enumerations
};

}  // namespace tropsch

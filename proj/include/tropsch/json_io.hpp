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

#include <json.hpp>

#include "tropsch/pipeline.hpp"

namespace tropsch {

// All scalar values in JSON are exact strings ("2/3", "inf"); no floating
// point appears anywhere in emitted documents.

nlohmann::json trop_poly_to_json(const TropPoly& f);
TropPoly trop_poly_from_json(const nlohmann::json& j);

// Matroid report: ground labels, rank, loops, normalization, and (when
// enumerable under the caps) circuits with their valuated circuits and the
// basis valuation table.  The "ground"/"rank"/"p" fields follow the synthetic
// matroid schema, so a report parses back as a synthetic matroid.
nlohmann::json matroid_to_json(const ValuatedMatroid& vm);

// Synthetic matroid: {"ground":["e1",...],"rank":2,
//                     "p":[{"B":["e1","e2"],"val":"0"},...]};
// absent subsets mean inf.
ValuatedMatroid synthetic_matroid_from_json(const nlohmann::json& j,
                                            bool validate,
                                            const Caps& caps = Caps{});

// Debug dump: column labels plus rows of exact coefficient strings.
nlohmann::json kmatrix_to_json(const KMatrix& m,
                               const std::vector<std::string>& vars);

}  // namespace tropsch

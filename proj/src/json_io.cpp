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

#include "tropsch/json_io.hpp"

#include <algorithm>

#include "tropsch/parse.hpp"

namespace tropsch {

using nlohmann::json;

nlohmann::json trop_poly_to_json(const TropPoly& f) {
  json terms = json::array();
  for (const auto& [u, c] : f.terms()) {
    json term;
    term["coef"] = to_string(c);
    term["exp"] = u.entries();
    terms.push_back(std::move(term));
  }
  json j;
  j["flavor"] = f.flavor() == Flavor::kProjective ? "projective" : "laurent";
  j["nvars"] = f.nvars();
  j["terms"] = std::move(terms);
  return j;
}

TropPoly trop_poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("flavor") || !j.contains("terms"))
    throw UsageError("trop_poly_from_json: malformed document");
  std::string fl = j.at("flavor").get<std::string>();
  Flavor flavor;
  if (fl == "projective")
    flavor = Flavor::kProjective;
  else if (fl == "laurent")
    flavor = Flavor::kLaurent;
  else
    throw UsageError("trop_poly_from_json: unknown flavor '" + fl + "'");
  int nvars = -1;
  if (j.contains("nvars")) nvars = j.at("nvars").get<int>();
  const json& terms = j.at("terms");
  if (!terms.is_array())
    throw UsageError("trop_poly_from_json: terms must be an array");
  if (nvars < 0) {
    if (terms.empty())
      throw UsageError("trop_poly_from_json: nvars needed for the empty map");
    nvars = static_cast<int>(terms.front().at("exp").size());
  }
  TropPoly out(flavor, nvars);
  for (const json& t : terms) {
    std::vector<int> e = t.at("exp").get<std::vector<int>>();
    if (static_cast<int>(e.size()) != nvars)
      throw UsageError("trop_poly_from_json: exponent length mismatch");
    Rational c = parse_rational(t.at("coef").get<std::string>());
    out.add_term(Exponent(flavor, std::move(e)), TropScalar(c));
  }
  return out;
}

namespace {

json mask_to_labels(const ValuatedMatroid& vm, Mask a) {
  json arr = json::array();
  for (int i : mask_elems(a)) arr.push_back(vm.labels()[i]);
  return arr;
}

}  // namespace

nlohmann::json matroid_to_json(const ValuatedMatroid& vm) {
  json j;
  j["ground"] = vm.labels();
  j["rank"] = vm.rank();
  j["normalization"] = to_string(vm.normalization());
  j["loops"] = mask_to_labels(vm, vm.loops());
  j["loop_coefficient_convention"] = "inf";
  try {
    std::vector<Mask> bs = vm.bases();
    json table = json::array();
    for (Mask b : bs) {
      json entry;
      entry["B"] = mask_to_labels(vm, b);
      entry["val"] = to_string(vm.p(b));
      table.push_back(std::move(entry));
    }
    j["p"] = std::move(table);
  } catch (const CapError&) {
    j["p"] = nullptr;
  }
  try {
    json circuits = json::array();
    json vcircuits = json::array();
    for (Mask c : vm.circuits()) {
      circuits.push_back(mask_to_labels(vm, c));
      ValuatedCircuit g = vm.valuated_circuit(c, std::countr_zero(c));
      json vc;
      vc["circuit"] = mask_to_labels(vm, c);
      json coeffs = json::object();
      for (int i : mask_elems(c))
        coeffs[vm.labels()[i]] = to_string(g.coeff[i]);
      vc["coeff"] = std::move(coeffs);
      vcircuits.push_back(std::move(vc));
    }
    j["circuits"] = std::move(circuits);
    j["valuated_circuits"] = std::move(vcircuits);
  } catch (const CapError&) {
    j["circuits"] = nullptr;
    j["valuated_circuits"] = nullptr;
  }
  return j;
}

nlohmann::json kmatrix_to_json(const KMatrix& m,
                               const std::vector<std::string>& vars) {
  json j;
  json cols = json::array();
  for (const Exponent& u : m.cols()) cols.push_back(monomial_string(u, vars));
  j["columns"] = std::move(cols);
  json rows = json::array();
  for (int i = 0; i < m.nrows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.ncols(); ++c) row.push_back(m.at(i, c).str());
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

ValuatedMatroid synthetic_matroid_from_json(const nlohmann::json& j,
                                            bool validate, const Caps& caps) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("rank") ||
      !j.contains("p"))
    throw UsageError("synthetic matroid: need ground, rank, and p");
  std::vector<std::string> labels =
      j.at("ground").get<std::vector<std::string>>();
  int rank = j.at("rank").get<int>();
  std::vector<std::pair<Mask, TropScalar>> table;
  for (const json& entry : j.at("p")) {
    Mask b = 0;
    for (const json& lab : entry.at("B")) {
      std::string name = lab.get<std::string>();
      auto it = std::find(labels.begin(), labels.end(), name);
      if (it == labels.end())
        throw UsageError("synthetic matroid: unknown ground element '" + name +
                         "'");
      b |= mask_bit(static_cast<int>(it - labels.begin()));
    }
    TropScalar v = parse_trop_scalar(entry.at("val").get<std::string>());
    table.emplace_back(b, v);
  }
  return ValuatedMatroid::synthetic(std::move(labels), rank, table, validate,
                                    caps);
}

}  // namespace tropsch

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

#include "tropsch/cli_run.hpp"

#include <CLI11.hpp>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tropsch/json_io.hpp"
#include "tropsch/parse.hpp"

namespace tropsch {

namespace {

struct Shared {
  std::string ideal_path;
  int degree = -1;
  int dmax = -1;
  std::string weights;
  std::string f_text;
  std::string g_text;
  std::string vars_csv;
  std::string hvar = "x0";
  std::string matroid_path;
  bool json = false;
  bool exhaustive = false;
  long long samples = 2000;
  std::uint64_t seed = 0;
  Caps caps;
};

Caps caps_from_env() {
  Caps caps;
  const char* env = std::getenv("TROPSCH_CAPS");
  if (!env) return caps;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw UsageError("TROPSCH_CAPS: expected key=value entries");
    std::string key = item.substr(0, eq);
    long long v = std::strtoll(item.c_str() + eq + 1, nullptr, 10);
    if (key == "md")
      caps.max_md = static_cast<int>(v);
    else if (key == "circuits")
      caps.max_circuit_ground = static_cast<int>(v);
    else if (key == "enum")
      caps.max_enum = v;
    else
      throw UsageError("TROPSCH_CAPS: unknown key '" + key + "'");
  }
  return caps;
}

void add_shared_flags(CLI::App* cmd, Shared* sh) {
  cmd->add_option("-i,--ideal", sh->ideal_path, "ideal file");
  cmd->add_option("-d,--degree", sh->degree, "degree");
  cmd->add_option("--dmax", sh->dmax, "maximum degree");
  cmd->add_option("-w,--weights", sh->weights, "comma-separated rationals");
  cmd->add_option("-F", sh->f_text, "tropical polynomial");
  cmd->add_option("-G", sh->g_text, "tropical polynomial");
  cmd->add_option("--vars", sh->vars_csv,
                  "comma-separated variable names (commands without an ideal)");
  cmd->add_option("--hvar", sh->hvar, "homogenizing variable name");
  cmd->add_option("--matroid", sh->matroid_path, "synthetic matroid JSON file");
  cmd->add_flag("--json", sh->json, "emit a JSON document");
  cmd->add_flag("--exhaustive", sh->exhaustive, "check all basis pairs");
  cmd->add_option("--samples", sh->samples, "sampled pair count");
  cmd->add_option("--seed", sh->seed, "seed for randomized commands");
  cmd->add_option("--cap-md", sh->caps.max_md, "monomials-per-degree cap");
  cmd->add_option("--cap-circuits", sh->caps.max_circuit_ground,
                  "circuit enumeration ground cap");
  cmd->add_option("--cap-enum", sh->caps.max_enum, "basis enumeration cap");
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw UsageError("empty name in a variable list");
    out.push_back(item);
  }
  return out;
}

// Plain key=value config: values fill in flags not given on the command
// line.  Single-letter keys map to short flags.
std::vector<std::string> apply_config(const std::vector<std::string>& args) {
  std::string path;
  std::vector<std::string> out;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config: expected key = value", lineno, 1);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t") + 1);
    if (key.empty()) throw ParseError("config: empty key", lineno, 1);
    std::string flag = (key.size() == 1 ? "-" : "--") + key;
    bool present = false;
    for (const auto& a : out)
      if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
    if (present) continue;
    if (value == "true") {
      out.push_back(flag);
    } else if (value == "false") {
      // omitted flag
    } else {
      out.push_back(flag);
      out.push_back(value);
    }
  }
  return out;
}

std::string format_valuated_circuit(const ValuatedMatroid& vm, Mask c) {
  ValuatedCircuit g = vm.valuated_circuit(c, std::countr_zero(c));
  std::vector<std::string> parts;
  for (int i : mask_elems(c)) {
    const TropScalar& coef = g.coeff[i];
    if (coef == TropScalar(0L))
      parts.push_back(vm.labels()[i]);
    else
      parts.push_back(to_string(coef) + " + " + vm.labels()[i]);
  }
  if (parts.size() == 1) return parts[0];
  std::string s = "min(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += parts[i];
  }
  return s + ")";
}

std::string mask_labels(const ValuatedMatroid& vm, Mask a) {
  std::string s = "{";
  bool first = true;
  for (int i : mask_elems(a)) {
    if (!first) s += ",";
    s += vm.labels()[i];
    first = false;
  }
  return s + "}";
}

int infer_degree(const Shared& sh, const TropPoly& f, const TropPoly& g,
                 bool have_g) {
  if (sh.degree >= 0) return sh.degree;
  if (!f.empty()) return degree(f);
  if (have_g && !g.empty()) return degree(g);
  throw UsageError("degree cannot be inferred; pass -d");
}

int cmd_matroid(const Shared& sh, std::ostream& out) {
  if (sh.ideal_path.empty()) throw UsageError("matroid: -i is required");
  if (sh.degree < 0) throw UsageError("matroid: -d is required");
  IdealSpec spec = parse_ideal_file_path(sh.ideal_path);
  DegreeModel model = build_degree(spec, sh.degree, sh.caps);
  const ValuatedMatroid& vm = model.matroid();
  if (sh.json) {
    nlohmann::json j;
    j["command"] = "matroid";
    j["degree"] = model.d;
    j["hilbert"] = model.hilbert;
    j["matroid"] = matroid_to_json(vm);
    j["reduced_basis"] = kmatrix_to_json(model.reduced, spec.vars);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "degree: " << model.d << "\n";
  out << "monomials:";
  for (const std::string& l : vm.labels()) out << " " << l;
  out << "\n";
  out << "hilbert: " << model.hilbert << "\n";
  out << "rank: " << vm.rank() << "\n";
  out << "normalization: " << to_string(vm.normalization()) << "\n";
  out << "loops:";
  if (vm.loops() == 0)
    out << " (none)";
  else
    for (int i : mask_elems(vm.loops())) out << " " << vm.labels()[i];
  out << "\n";
  try {
    out << "circuits:\n";
    for (Mask c : vm.circuits())
      out << "  " << mask_labels(vm, c) << ": "
          << format_valuated_circuit(vm, c) << "\n";
  } catch (const CapError&) {
    out << "  (skipped: over the circuit cap)\n";
  }
  try {
    out << "bases (p):\n";
    for (Mask b : vm.bases())
      out << "  " << mask_labels(vm, b) << ": " << to_string(vm.p(b)) << "\n";
  } catch (const CapError&) {
    out << "  (skipped: over the enumeration cap)\n";
  }
  return 0;
}

int cmd_pi(const Shared& sh, std::ostream& out) {
  if (sh.ideal_path.empty()) throw UsageError("pi: -i is required");
  if (sh.f_text.empty()) throw UsageError("pi: -F is required");
  IdealSpec spec = parse_ideal_file_path(sh.ideal_path);
  TropPoly f = parse_trop_poly(sh.f_text, spec.vars, Flavor::kProjective);
  TropPoly g(Flavor::kProjective, spec.nvars());
  int d = infer_degree(sh, f, g, false);
  DegreeModel model = build_degree(spec, d, sh.caps);
  TropPoly pi = model.pi->pi_fast(f);
  if (sh.json) {
    nlohmann::json j;
    j["command"] = "pi";
    j["degree"] = d;
    j["input"] = trop_poly_to_json(f);
    j["pi"] = trop_poly_to_json(pi);
    j["pi_text"] = to_string(pi, spec.vars);
    j["loop_coefficient_convention"] = "inf";
    out << j.dump(2) << "\n";
  } else {
    out << to_string(pi, spec.vars) << "\n";
  }
  return 0;
}

int cmd_equiv(const Shared& sh, std::ostream& out) {
  if (sh.ideal_path.empty()) throw UsageError("equiv: -i is required");
  if (sh.f_text.empty() || sh.g_text.empty())
    throw UsageError("equiv: -F and -G are required");
  IdealSpec spec = parse_ideal_file_path(sh.ideal_path);
  TropPoly f = parse_trop_poly(sh.f_text, spec.vars, Flavor::kProjective);
  TropPoly g = parse_trop_poly(sh.g_text, spec.vars, Flavor::kProjective);
  ModelSet models(spec, sh.caps);
  bool result = equiv_graded(
      [&](int d) -> const PiContext& { return *models.get(d).pi; }, f, g);
  if (sh.json) {
    nlohmann::json j;
    j["command"] = "equiv";
    j["lhs"] = trop_poly_to_json(f);
    j["rhs"] = trop_poly_to_json(g);
    j["equivalent"] = result;
    out << j.dump(2) << "\n";
  } else {
    out << (result ? "true" : "false") << "\n";
  }
  return result ? 0 : 1;
}

int cmd_initial(const Shared& sh, std::ostream& out) {
  if (sh.weights.empty()) throw UsageError("initial: -w is required");
  std::vector<Rational> w = parse_weights(sh.weights);
  if (!sh.f_text.empty()) {
    // Initial form of a polynomial or a relation.
    std::vector<std::string> vars;
    Flavor flavor;
    if (!sh.ideal_path.empty()) {
      vars = parse_ideal_file_path(sh.ideal_path).vars;
      flavor = Flavor::kProjective;
    } else if (!sh.vars_csv.empty()) {
      vars = split_csv(sh.vars_csv);
      flavor = Flavor::kLaurent;
    } else {
      throw UsageError("initial: pass -i or --vars for the variable names");
    }
    TropPoly f = parse_trop_poly(sh.f_text, vars, flavor);
    if (!sh.g_text.empty()) {
      TropPoly g = parse_trop_poly(sh.g_text, vars, flavor);
      Relation r = initial_relation(Relation(f, g), w);
      if (sh.json) {
        nlohmann::json j;
        j["command"] = "initial";
        j["lhs"] = trop_poly_to_json(r.lhs);
        j["rhs"] = trop_poly_to_json(r.rhs);
        j["text"] = to_string(r, vars);
        out << j.dump(2) << "\n";
      } else {
        out << to_string(r, vars) << "\n";
      }
      return 0;
    }
    TropPoly init = initial_form(f, w);
    if (sh.json) {
      nlohmann::json j;
      j["command"] = "initial";
      j["initial"] = trop_poly_to_json(init);
      j["text"] = to_string(init, vars);
      out << j.dump(2) << "\n";
    } else {
      out << to_string(init, vars) << "\n";
    }
    return 0;
  }
  // Initial degeneration of a degree piece, with the matroid cross-check.
  if (sh.ideal_path.empty())
    throw UsageError("initial: -i is required without -F");
  if (sh.degree < 0) throw UsageError("initial: -d is required without -F");
  IdealSpec spec = parse_ideal_file_path(sh.ideal_path);
  InitialModel init = initial_degree_model(spec, w, sh.degree, sh.caps);
  DegreeModel model = build_degree(spec, sh.degree, sh.caps);
  MatroidCheckReport check = initial_matroid_check(model, w, sh.caps);
  if (sh.json) {
    nlohmann::json j;
    j["command"] = "initial";
    j["degree"] = sh.degree;
    j["dimension"] = init.basis.size();
    nlohmann::json rows = nlohmann::json::array();
    for (const QPoly& q : init.basis) rows.push_back(to_string(q, spec.vars));
    j["basis"] = std::move(rows);
    j["matroid"] = init.matroid ? matroid_to_json(*init.matroid)
                                : nlohmann::json(nullptr);
    j["matroid_check_agree"] = check.agree;
    out << j.dump(2) << "\n";
  } else {
    out << "dim = " << init.basis.size() << "\n";
    out << "basis:\n";
    for (const QPoly& q : init.basis)
      out << "  " << to_string(q, spec.vars) << "\n";
    out << "matroid check: " << (check.agree ? "agree" : "DISAGREE") << "\n";
  }
  return check.agree ? 0 : 1;
}

int cmd_hilbert(const Shared& sh, std::ostream& out) {
  if (sh.ideal_path.empty()) throw UsageError("hilbert: -i is required");
  if (sh.dmax < 0) throw UsageError("hilbert: --dmax is required");
  IdealSpec spec = parse_ideal_file_path(sh.ideal_path);
  auto values = hilbert_function(spec, sh.dmax, sh.caps);
  if (sh.json) {
    nlohmann::json j;
    j["command"] = "hilbert";
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [d, v] : values) arr.push_back({{"d", d}, {"value", v}});
    j["values"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [d, v] : values) out << "d=" << d << ": " << v << "\n";
  }
  return 0;
}

int cmd_bendcheck(const Shared& sh, std::ostream& out) {
  if (sh.ideal_path.empty()) throw UsageError("bendcheck: -i is required");
  if (sh.weights.empty()) throw UsageError("bendcheck: -w is required");
  if (sh.dmax < 0) throw UsageError("bendcheck: --dmax is required");
  IdealSpec spec = parse_ideal_file_path(sh.ideal_path);
  std::vector<Rational> w = parse_weights(sh.weights);
  BendVerdict v = bend_check_point(spec, w, sh.dmax, sh.caps);
  if (sh.json) {
    nlohmann::json j;
    j["command"] = "bendcheck";
    j["pass"] = v.pass;
    j["checked_up_to"] = v.checked_up_to;
    j["exact_for_principal"] = v.exact_for_principal;
    if (!v.pass) {
      j["witness_degree"] = v.witness_degree;
      j["witness"] = to_string(*v.witness, spec.vars);
    }
    out << j.dump(2) << "\n";
  } else if (v.pass) {
    out << "PASS-UP-TO-DEGREE(" << v.checked_up_to << ")";
    if (v.exact_for_principal) out << " (exact: principal ideal)";
    out << "\n";
  } else {
    out << "FAIL at degree " << v.witness_degree << ": witness "
        << to_string(*v.witness, spec.vars) << "\n";
  }
  return v.pass ? 0 : 1;
}

int cmd_homogenize(const Shared& sh, std::ostream& out) {
  if (sh.f_text.empty()) throw UsageError("homogenize: -F is required");
  if (sh.vars_csv.empty()) throw UsageError("homogenize: --vars is required");
  std::vector<std::string> vars = split_csv(sh.vars_csv);
  for (const std::string& v : vars)
    if (v == sh.hvar)
      throw UsageError("homogenize: variable '" + v +
                       "' clashes with the homogenizing variable");
  std::vector<std::string> pvars;
  pvars.push_back(sh.hvar);
  pvars.insert(pvars.end(), vars.begin(), vars.end());
  TropPoly f = parse_trop_poly(sh.f_text, vars, Flavor::kLaurent);
  if (!sh.g_text.empty()) {
    TropPoly g = parse_trop_poly(sh.g_text, vars, Flavor::kLaurent);
    Relation r = homogenize_relation(Relation(f, g));
    if (sh.json) {
      nlohmann::json j;
      j["command"] = "homogenize";
      j["lhs"] = trop_poly_to_json(r.lhs);
      j["rhs"] = trop_poly_to_json(r.rhs);
      j["text"] = to_string(r, pvars);
      out << j.dump(2) << "\n";
    } else {
      out << to_string(r, pvars) << "\n";
    }
    return 0;
  }
  TropPoly h = homogenize(f);
  if (sh.json) {
    nlohmann::json j;
    j["command"] = "homogenize";
    j["result"] = trop_poly_to_json(h);
    j["text"] = to_string(h, pvars);
    out << j.dump(2) << "\n";
  } else {
    out << to_string(h, pvars) << "\n";
  }
  return 0;
}

int cmd_axioms(const Shared& sh, std::ostream& out) {
  std::optional<ValuatedMatroid> vm;
  if (!sh.matroid_path.empty()) {
    std::ifstream in(sh.matroid_path);
    if (!in)
      throw UsageError("cannot open matroid file '" + sh.matroid_path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw UsageError(std::string("matroid JSON: ") + e.what());
    }
    vm = synthetic_matroid_from_json(j, /*validate=*/false, sh.caps);
  } else if (!sh.ideal_path.empty()) {
    if (sh.degree < 0) throw UsageError("axioms: -d is required with -i");
    IdealSpec spec = parse_ideal_file_path(sh.ideal_path);
    vm = build_degree(spec, sh.degree, sh.caps).matroid();
  } else {
    throw UsageError("axioms: pass --matroid or -i with -d");
  }
  PluckerReport rep;
  if (sh.exhaustive) {
    rep = vm->check_plucker(true);
  } else {
    try {
      rep = vm->check_plucker(true);
    } catch (const CapError&) {
      rep = vm->check_plucker(false, sh.seed, sh.samples);
    }
  }
  if (sh.json) {
    nlohmann::json j;
    j["command"] = "axioms";
    j["pass"] = rep.ok;
    j["pairs_checked"] = rep.pairs_checked;
    if (!rep.ok) j["violation"] = rep.detail;
    out << j.dump(2) << "\n";
  } else if (rep.ok) {
    out << "pass (" << rep.pairs_checked << " pairs checked)\n";
  } else {
    out << "violation: " << rep.detail << "\n";
  }
  return rep.ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    Caps env_caps = caps_from_env();
    std::vector<std::string> argv = apply_config(args);

    CLI::App app{"exact tropical-scheme toolkit"};
    app.require_subcommand(1);
    Shared sh;
    sh.caps = env_caps;

    struct Cmd {
      const char* name;
      const char* help;
      int (*fn)(const Shared&, std::ostream&);
    };
    const Cmd cmds[] = {
        {"matroid", "valuated matroid of a degree piece", cmd_matroid},
        {"pi", "canonical form of a homogeneous tropical polynomial", cmd_pi},
        {"equiv", "congruence membership of a relation", cmd_equiv},
        {"initial", "initial forms and initial degree pieces", cmd_initial},
        {"hilbert", "Hilbert function values", cmd_hilbert},
        {"bendcheck", "necessary-condition tropical point check",
         cmd_bendcheck},
        {"homogenize", "homogenize a tropical polynomial or relation",
         cmd_homogenize},
        {"axioms", "tropical exchange axiom check", cmd_axioms},
    };
    for (const Cmd& c : cmds) {
      CLI::App* sub = app.add_subcommand(c.name, c.help);
      add_shared_flags(sub, &sh);
      sub->callback([]() {});
    }

    std::vector<char*> cargs;
    std::string prog = "tropsch";
    cargs.push_back(prog.data());
    for (auto& a : argv) cargs.push_back(a.data());
    try {
      app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }

    for (const Cmd& c : cmds)
      if (app.get_subcommand(c.name)->parsed()) return c.fn(sh, out);
    err << "error: no command\n";
    return 2;
  } catch (const CapError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tropsch

// Copyright 2026 The tchub Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "tchub/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace tchub {

using nlohmann::json;

namespace {

std::string join_issues(const std::vector<ConfigIssue>& issues) {
  std::string out = "invalid configuration:";
  for (const ConfigIssue& i : issues) out += "\n  " + i.path + ": " + i.reason;
  return out;
}

class Reader {
 public:
  std::vector<ConfigIssue> issues;

  void fail(const std::string& path, const std::string& reason) { issues.push_back({path, reason}); }

  /// Returns the object at key (or an empty object) after checking for unknown members.
  const json* object(const json& parent, const std::string& key, const std::string& path,
                     std::initializer_list<const char*> allowed) {
    if (!parent.contains(key)) return nullptr;
    const json& obj = parent.at(key);
    if (!obj.is_object()) {
      fail(path, "must be an object");
      return nullptr;
    }
    check_keys(obj, path, allowed);
    return &obj;
  }

  void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    const std::set<std::string> names(allowed.begin(), allowed.end());
    for (const auto& [k, v] : obj.items())
      if (!names.count(k)) fail(path + "/" + k, "unknown field");
  }

  void number(const json* obj, const char* key, const std::string& path, double& out) {
    if (!obj || !obj->contains(key)) return;
    const json& v = obj->at(key);
    if (!v.is_number()) return fail(path + "/" + key, "must be a number");
    out = v.get<double>();
    if (!std::isfinite(out)) fail(path + "/" + key, "must be finite");
  }

  void integer(const json* obj, const char* key, const std::string& path, long long& out) {
    if (!obj || !obj->contains(key)) return;
    const json& v = obj->at(key);
    if (!v.is_number_integer()) return fail(path + "/" + key, "must be an integer");
    out = v.get<long long>();
  }

  void boolean(const json* obj, const char* key, const std::string& path, bool& out) {
    if (!obj || !obj->contains(key)) return;
    const json& v = obj->at(key);
    if (!v.is_boolean()) return fail(path + "/" + key, "must be true or false");
    out = v.get<bool>();
  }

  bool string(const json* obj, const char* key, const std::string& path, std::string& out) {
    if (!obj || !obj->contains(key)) return false;
    const json& v = obj->at(key);
    if (!v.is_string()) {
      fail(path + "/" + key, "must be a string");
      return false;
    }
    out = v.get<std::string>();
    return true;
  }
};

int to_int(Reader& r, long long v, const std::string& path, long long lo, long long hi) {
  if (v < lo || v > hi) {
    r.fail(path, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(lo);
  }
  return static_cast<int>(v);
}

}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

std::vector<double> JGrid::values() const {
  std::vector<double> out;
  const auto n = static_cast<long long>(std::floor((max - min) / step + 1e-9));
  for (long long k = 0; k <= n; ++k) out.push_back(min + static_cast<double>(k) * step);
  return out;
}

ExperimentConfig parse_config(const json& doc) {
  ExperimentConfig cfg;
  Reader r;
  if (doc.is_null()) return cfg;
  if (!doc.is_object()) throw ConfigError(std::vector<ConfigIssue>{{"/", "configuration must be a JSON object"}});
  r.check_keys(doc, "", {"label", "out_dir", "recipe", "hamiltonian", "ansatz", "initial_state", "qite", "mode",
                         "shots", "seed", "optimize_j", "j_grid", "vqe"});
  QiteConfig& q = cfg.qite;

  r.string(&doc, "label", "", cfg.label);
  r.string(&doc, "out_dir", "", cfg.out_dir);
  r.string(&doc, "recipe", "", cfg.recipe);

  if (const json* h = r.object(doc, "hamiltonian", "/hamiltonian",
                               {"variant", "n_sites", "ny", "representation", "tc", "t", "U", "J"})) {
    long long nx = q.hamiltonian.nx, ny = q.hamiltonian.ny;
    r.integer(h, "n_sites", "/hamiltonian", nx);
    r.integer(h, "ny", "/hamiltonian", ny);
    q.hamiltonian.nx = to_int(r, nx, "/hamiltonian/n_sites", 2, 32);
    q.hamiltonian.ny = to_int(r, ny, "/hamiltonian/ny", 1, 16);
    std::string variant;
    if (r.string(h, "variant", "/hamiltonian", variant)) {
      try {
        apply_variant(q.hamiltonian, variant);
      } catch (const std::invalid_argument& e) {
        r.fail("/hamiltonian/variant", e.what());
      }
    }
    std::string rep;
    if (r.string(h, "representation", "/hamiltonian", rep)) {
      try {
        q.hamiltonian.representation = parse_representation(rep);
      } catch (const std::invalid_argument& e) {
        r.fail("/hamiltonian/representation", e.what());
      }
    }
    r.boolean(h, "tc", "/hamiltonian", q.hamiltonian.transcorrelated);
    r.number(h, "t", "/hamiltonian", q.hamiltonian.t);
    r.number(h, "U", "/hamiltonian", q.hamiltonian.U);
    if (h->contains("J") && !h->at("J").is_null()) {
      double j = 0;
      r.number(h, "J", "/hamiltonian", j);
      q.hamiltonian.J = j;
    }
    if (q.hamiltonian.t < 0) r.fail("/hamiltonian/t", "hopping must be non-negative");
    if (q.hamiltonian.U < 0) r.fail("/hamiltonian/U", "interaction must be non-negative");
    if ((q.hamiltonian.nx * q.hamiltonian.ny) % 2 != 0) r.fail("/hamiltonian/n_sites", "half filling needs an even site count");
  }

  if (const json* a = r.object(doc, "ansatz", "/ansatz", {"kind", "layers"})) {
    std::string kind;
    if (r.string(a, "kind", "/ansatz", kind)) {
      try {
        q.ansatz.kind = parse_ansatz_kind(kind);
      } catch (const std::invalid_argument& e) {
        r.fail("/ansatz/kind", e.what());
      }
    }
    long long layers = q.ansatz.layers;
    r.integer(a, "layers", "/ansatz", layers);
    q.ansatz.layers = to_int(r, layers, "/ansatz/layers", 1, 16);
  }
  r.string(&doc, "initial_state", "", q.initial_state);

  if (const json* s = r.object(doc, "qite", "/qite",
                               {"dt", "max_steps", "grad_norm_threshold", "lambda_min", "lambda_max",
                                "corner_termination", "derivatives", "fd_step", "gradient", "global_phase",
                                "freeze_global_phase"})) {
    r.number(s, "dt", "/qite", q.dt);
    if (!(q.dt > 0)) r.fail("/qite/dt", "Δt must be positive");
    long long steps = q.max_steps;
    r.integer(s, "max_steps", "/qite", steps);
    q.max_steps = to_int(r, steps, "/qite/max_steps", 0, 1000000);
    r.number(s, "grad_norm_threshold", "/qite", q.grad_norm_threshold);
    if (q.grad_norm_threshold < 0) r.fail("/qite/grad_norm_threshold", "must be non-negative");
    r.number(s, "lambda_min", "/qite", q.lambda_min);
    r.number(s, "lambda_max", "/qite", q.lambda_max);
    if (!(q.lambda_min > 0)) r.fail("/qite/lambda_min", "must be positive");
    if (!(q.lambda_max > q.lambda_min)) r.fail("/qite/lambda_max", "must exceed lambda_min");
    r.number(s, "corner_termination", "/qite", q.corner_termination);
    if (!(q.corner_termination > 0)) r.fail("/qite/corner_termination", "must be positive");
    std::string method;
    if (r.string(s, "derivatives", "/qite", method)) {
      if (method == "analytic") q.derivatives = DerivativeMethod::analytic;
      else if (method == "finite_difference") q.derivatives = DerivativeMethod::finite_difference;
      else r.fail("/qite/derivatives", "expected analytic or finite_difference");
    }
    r.number(s, "fd_step", "/qite", q.fd_step);
    if (!(q.fd_step > 0)) r.fail("/qite/fd_step", "must be positive");
    std::string gradient;
    if (r.string(s, "gradient", "/qite", gradient)) {
      if (gradient == "direct") q.gradient = GradientEvaluation::direct;
      else if (gradient == "ancilla") q.gradient = GradientEvaluation::ancilla;
      else r.fail("/qite/gradient", "expected direct or ancilla");
    }
    r.boolean(s, "global_phase", "/qite", q.global_phase);
    r.boolean(s, "freeze_global_phase", "/qite", q.freeze_global_phase);
  }

  std::string mode;
  if (r.string(&doc, "mode", "", mode)) {
    if (mode == "sv") q.mode = EvalMode::sv;
    else if (mode == "shots") q.mode = EvalMode::shots;
    else r.fail("/mode", "expected sv or shots");
  }
  if (const json* s = r.object(doc, "shots", "/shots", {"count", "readout_flip"})) {
    long long count = q.shots.shots;
    r.integer(s, "count", "/shots", count);
    if (count <= 0) r.fail("/shots/count", "must be positive");
    q.shots.shots = count;
    r.number(s, "readout_flip", "/shots", q.shots.readout_flip);
    if (q.shots.readout_flip < 0 || q.shots.readout_flip >= 0.5) r.fail("/shots/readout_flip", "must lie in [0, 0.5)");
  }
  if (doc.contains("seed")) {
    const json& v = doc.at("seed");
    if (!v.is_number_unsigned()) r.fail("/seed", "must be a non-negative integer");
    else q.shots.seed = v.get<std::uint64_t>();
  }

  if (const json* o = r.object(doc, "optimize_j", "/optimize_j", {"bracket", "tol"})) {
    if (o->contains("bracket")) {
      const json& b = o->at("bracket");
      if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number())
        r.fail("/optimize_j/bracket", "must be an array of two numbers");
      else cfg.j_bracket = {b[0].get<double>(), b[1].get<double>()};
      if (!(cfg.j_bracket.first < cfg.j_bracket.second)) r.fail("/optimize_j/bracket", "lower end must be below upper end");
    }
    r.number(o, "tol", "/optimize_j", cfg.j_tolerance);
    if (!(cfg.j_tolerance > 0)) r.fail("/optimize_j/tol", "must be positive");
  }
  if (const json* g = r.object(doc, "j_grid", "/j_grid", {"min", "max", "step"})) {
    r.number(g, "min", "/j_grid", cfg.j_grid.min);
    r.number(g, "max", "/j_grid", cfg.j_grid.max);
    r.number(g, "step", "/j_grid", cfg.j_grid.step);
    if (!(cfg.j_grid.step > 0)) r.fail("/j_grid/step", "must be positive");
    if (!(cfg.j_grid.max >= cfg.j_grid.min)) r.fail("/j_grid/max", "must not be below min");
  }
  if (const json* v = r.object(doc, "vqe", "/vqe", {"grad_tolerance", "max_iterations"})) {
    r.number(v, "grad_tolerance", "/vqe", cfg.vqe.grad_tolerance);
    if (!(cfg.vqe.grad_tolerance > 0)) r.fail("/vqe/grad_tolerance", "must be positive");
    long long it = cfg.vqe.max_iterations;
    r.integer(v, "max_iterations", "/vqe", it);
    cfg.vqe.max_iterations = to_int(r, it, "/vqe/max_iterations", 0, 10000000);
  }

  if (r.issues.empty()) {
    try {
      q.hamiltonian.validate();
    } catch (const std::exception& e) {
      r.fail("/hamiltonian", e.what());
    }
  }
  if (!r.issues.empty()) throw ConfigError(std::move(r.issues));
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(std::vector<ConfigIssue>{{path, "cannot open file"}});
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return parse_config(json());
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::vector<ConfigIssue>{{path, std::string("malformed JSON: ") + e.what()}});
  }
  return parse_config(doc);
}

json to_json(const ExperimentConfig& cfg) {
  const QiteConfig& q = cfg.qite;
  const HamiltonianSpec& h = q.hamiltonian;
  json j;
  j["label"] = cfg.label;
  j["out_dir"] = cfg.out_dir;
  j["recipe"] = cfg.recipe;
  j["hamiltonian"] = {{"n_sites", h.nx},
                      {"ny", h.ny},
                      {"representation", to_string(h.representation)},
                      {"tc", h.transcorrelated},
                      {"t", h.t},
                      {"U", h.U},
                      {"J", h.params().J}};
  j["ansatz"] = {{"kind", to_string(q.ansatz.kind)}, {"layers", q.ansatz.layers}};
  j["initial_state"] = q.initial_state;
  j["qite"] = {{"dt", q.dt},
               {"max_steps", q.max_steps},
               {"grad_norm_threshold", q.grad_norm_threshold},
               {"lambda_min", q.lambda_min},
               {"lambda_max", q.lambda_max},
               {"corner_termination", q.corner_termination},
               {"derivatives", q.derivatives == DerivativeMethod::analytic ? "analytic" : "finite_difference"},
               {"fd_step", q.fd_step},
               {"gradient", q.gradient == GradientEvaluation::direct ? "direct" : "ancilla"},
               {"global_phase", q.global_phase},
               {"freeze_global_phase", q.freeze_global_phase}};
  j["mode"] = q.mode == EvalMode::sv ? "sv" : "shots";
  j["shots"] = {{"count", q.shots.shots}, {"readout_flip", q.shots.readout_flip}};
  j["seed"] = q.shots.seed;
  j["optimize_j"] = {{"bracket", {cfg.j_bracket.first, cfg.j_bracket.second}}, {"tol", cfg.j_tolerance}};
  j["j_grid"] = {{"min", cfg.j_grid.min}, {"max", cfg.j_grid.max}, {"step", cfg.j_grid.step}};
  j["vqe"] = {{"grad_tolerance", cfg.vqe.grad_tolerance}, {"max_iterations", cfg.vqe.max_iterations}};
  return j;
}

std::string config_hash(const ExperimentConfig& cfg) {
  nlohmann::json j = to_json(cfg);
  j.erase("out_dir");
  const std::string text = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tchub

// Copyright 2026 The euler-arnold Authors
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

#include "ea/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "ea/errors.hpp"
#include "json.hpp"

namespace ea::config {

using Json = nlohmann::ordered_json;
using models::Domain;
using models::ModelId;

namespace {

bool is_power_of_two(long v) { return v > 0 && (v & (v - 1)) == 0; }

// Maps JSON key paths back to source lines by scanning for the quoted keys
// in order. Good enough for error messages; falls back to the nearest
// enclosing key that was found.
class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {}

  int line(const std::vector<std::string>& path) const {
    size_t pos = 0;
    size_t found = std::string_view::npos;
    for (const std::string& key : path) {
      const std::string quoted = "\"" + key + "\"";
      size_t at = pos;
      while (true) {
        at = text_.find(quoted, at);
        if (at == std::string_view::npos) break;
        size_t after = at + quoted.size();
        while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
        if (after < text_.size() && text_[after] == ':') break;
        at += quoted.size();
      }
      if (at == std::string_view::npos) break;
      found = at;
      pos = at + quoted.size();
    }
    return found == std::string_view::npos ? 0 : line_at(found);
  }

  int line_at(size_t offset) const {
    int l = 1;
    for (size_t i = 0; i < offset && i < text_.size(); ++i)
      if (text_[i] == '\n') ++l;
    return l;
  }

 private:
  std::string_view text_;
};

std::string join(const std::vector<std::string>& path) {
  std::string s;
  for (const auto& p : path) s += (s.empty() ? "" : ".") + p;
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : loc_(text) {}

  [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& what) const {
    throw ConfigError(join(path) + ": " + what, loc_.line(path));
  }

  void object(const Json& j, const std::vector<std::string>& path) const {
    if (!j.is_object()) fail(path, "expected an object");
  }

  void keys(const Json& j, const std::vector<std::string>& path, const std::set<std::string>& allowed) const {
    object(j, path);
    for (const auto& [k, v] : j.items())
      if (!allowed.count(k)) {
        std::string list;
        for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
        auto p = path;
        p.push_back(k);
        fail(p, "unknown key" + (list.empty() ? std::string() : " (expected one of: " + list + ")"));
      }
  }

  double number(const Json& j, const std::vector<std::string>& path) const {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
  }

  long integer(const Json& j, const std::vector<std::string>& path) const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long>();
  }

  std::string string(const Json& j, const std::vector<std::string>& path) const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

  const Locator& locator() const { return loc_; }

 private:
  Locator loc_;
};

std::vector<std::string> split_params(std::string_view s) {
  std::vector<std::string> out;
  if (s == "-") return out;
  size_t start = 0;
  while (start < s.size()) {
    size_t end = s.find(',', start);
    if (end == std::string_view::npos) end = s.size();
    std::string_view tok = s.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) out.emplace_back(tok);
    start = end + 1;
  }
  return out;
}

std::vector<presets::Mode> parse_modes(const Parser& p, const Json& j, const std::vector<std::string>& path,
                                       Domain domain) {
  if (!j.is_array()) p.fail(path, "expected an array of modes");
  std::vector<presets::Mode> modes;
  for (const Json& m : j) {
    p.keys(m, path, {"k", "amplitude", "phase"});
    presets::Mode mode;
    if (!m.contains("k")) p.fail(path, "mode without \"k\"");
    const Json& k = m["k"];
    if (domain == Domain::Torus) {
      if (!k.is_array() || k.size() != 2 || !k[0].is_number_integer() || !k[1].is_number_integer())
        p.fail(path, "torus modes need \"k\": [k1, k2] with integer entries");
      mode.k1 = k[0].get<int>();
      mode.k2 = k[1].get<int>();
    } else {
      if (!k.is_number_integer()) p.fail(path, "circle modes need an integer \"k\"");
      mode.k1 = k.get<int>();
    }
    if (m.contains("amplitude")) mode.amplitude = p.number(m["amplitude"], path);
    if (m.contains("phase")) mode.phase = p.number(m["phase"], path);
    modes.push_back(mode);
  }
  return modes;
}

Json dump_modes(const std::vector<presets::Mode>& modes, Domain domain) {
  Json arr = Json::array();
  for (const auto& m : modes) {
    Json o;
    if (domain == Domain::Torus)
      o["k"] = {m.k1, m.k2};
    else
      o["k"] = m.k1;
    o["amplitude"] = m.amplitude;
    o["phase"] = m.phase;
    arr.push_back(o);
  }
  return arr;
}

}  // namespace

std::vector<std::string> legal_params(ModelId id) { return split_params(models::info(id).params); }

std::vector<std::string> snapshot_fields(ModelId id) {
  switch (id) {
    case ModelId::Burgers:
    case ModelId::Kdv:
    case ModelId::CamassaHolm:
    case ModelId::RigidBody: return {"u"};
    case ModelId::HunterSaxton: return {"v"};
    case ModelId::PairL2:
    case ModelId::PairL2Sigma:
    case ModelId::PairH1:
    case ModelId::PairH1Sigma:
    case ModelId::PairL2AlphaCentral: return {"u", "f"};
    case ModelId::Euler2D:
    case ModelId::QgBeta: return {"omega"};
    case ModelId::Boussinesq: return {"omega", "xi"};
    case ModelId::PassiveScalar: return {"omega", "f"};
    case ModelId::Mhd2D: return {"u1", "u2", "B1", "B2"};
    case ModelId::ChargedFluid: return {"u1", "u2", "rho"};
    case ModelId::TemplateMatching:
    case ModelId::Epdiff:
    case ModelId::LaeAlpha: return {"u1", "u2"};
  }
  return {};
}

std::string_view snapshot_policy_name(SnapshotPolicy p) {
  switch (p) {
    case SnapshotPolicy::None: return "none";
    case SnapshotPolicy::Final: return "final";
    case SnapshotPolicy::All: return "all";
  }
  return "final";
}

models::ModelSpec model_spec(const RunConfig& c) {
  models::ModelSpec spec;
  spec.id = models::parse_model(c.model);
  if (spec.id == ModelId::Epdiff || spec.id == ModelId::LaeAlpha) spec.alpha2 = 1.0;
  for (const auto& [k, v] : c.params) {
    if (k == "a") spec.a = v;
    else if (k == "beta") spec.beta = v;
    else if (k == "brunt") spec.brunt = v;
    else if (k == "alpha2") spec.alpha2 = v;
    else if (k == "b") spec.b = v;
    else if (k == "B0x") spec.B0[0] = v;
    else if (k == "B0y") spec.B0[1] = v;
    else if (k == "I1") spec.inertia[0] = v;
    else if (k == "I2") spec.inertia[1] = v;
    else if (k == "I3") spec.inertia[2] = v;
    else throw ConfigError("params." + k + ": unknown parameter");
  }
  return spec;
}

integrators::StepperConfig stepper_config(const RunConfig& c) {
  integrators::StepperConfig s;
  s.dt = c.time.dt;
  s.cfl = c.time.cfl;
  s.t_final = c.time.t_final;
  s.record_stride = c.time.stride;
  return s;
}

RunConfig parse_config(std::string_view text) {
  Parser p(text);
  Json j;
  try {
    j = Json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const Json::parse_error& e) {
    const size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    // Drop the library's "[json.exception.parse_error.101] " prefix.
    if (const auto at = what.find("] "); at != std::string::npos) what = what.substr(at + 2);
    throw ConfigError("malformed JSON: " + what, p.locator().line_at(byte));
  }
  p.keys(j, {}, {"model", "grid", "params", "initial", "time", "output"});

  RunConfig c;
  if (!j.contains("model")) throw ConfigError("missing required key \"model\"", 1);
  c.model = p.string(j["model"], {"model"});
  ModelId id;
  try {
    id = models::parse_model(c.model);
  } catch (const ContractError&) {
    p.fail({"model"}, "unknown model '" + c.model + "' (see list-models)");
  }
  const Domain domain = models::info(id).domain;

  if (j.contains("grid")) {
    const Json& g = j["grid"];
    if (domain == Domain::Circle) {
      p.keys(g, {"grid"}, {"n"});
      if (g.contains("n")) c.grid.n = static_cast<int>(p.integer(g["n"], {"grid", "n"}));
      if (!is_power_of_two(c.grid.n) || c.grid.n < 8) p.fail({"grid", "n"}, "must be a power of two >= 8");
    } else if (domain == Domain::Torus) {
      p.keys(g, {"grid"}, {"nx", "ny"});
      if (g.contains("nx")) c.grid.nx = static_cast<int>(p.integer(g["nx"], {"grid", "nx"}));
      if (g.contains("ny")) c.grid.ny = static_cast<int>(p.integer(g["ny"], {"grid", "ny"}));
      if (!is_power_of_two(c.grid.nx) || c.grid.nx < 8) p.fail({"grid", "nx"}, "must be a power of two >= 8");
      if (!is_power_of_two(c.grid.ny) || c.grid.ny < 8) p.fail({"grid", "ny"}, "must be a power of two >= 8");
    } else {
      p.keys(g, {"grid"}, {});
    }
  }

  if (j.contains("params")) {
    const auto legal = legal_params(id);
    const Json& q = j["params"];
    p.keys(q, {"params"}, std::set<std::string>(legal.begin(), legal.end()));
    for (const auto& [k, v] : q.items()) c.params[k] = p.number(v, {"params", k});
  }

  if (j.contains("initial")) {
    const Json& in = j["initial"];
    p.keys(in, {"initial"}, {"preset", "seed", "amplitude", "modes", "fields", "vector"});
    if (in.contains("preset")) {
      c.initial.preset = p.string(in["preset"], {"initial", "preset"});
      const auto& names = presets::preset_names();
      if (std::find(names.begin(), names.end(), c.initial.preset) == names.end())
        p.fail({"initial", "preset"}, "unknown preset '" + c.initial.preset + "'");
    }
    if (in.contains("seed")) {
      const long seed = p.integer(in["seed"], {"initial", "seed"});
      if (seed < 0) p.fail({"initial", "seed"}, "must be non-negative");
      c.initial.seed = static_cast<std::uint64_t>(seed);
    }
    if (in.contains("amplitude")) c.initial.amplitude = p.number(in["amplitude"], {"initial", "amplitude"});
    const auto field_names = presets::field_names(id);
    if (in.contains("modes")) {
      if (domain == Domain::Algebra) p.fail({"initial", "modes"}, "the rigid body takes \"vector\"");
      c.initial.fields[field_names.front()].modes = parse_modes(p, in["modes"], {"initial", "modes"}, domain);
    }
    if (in.contains("fields")) {
      const Json& f = in["fields"];
      p.keys(f, {"initial", "fields"}, std::set<std::string>(field_names.begin(), field_names.end()));
      for (const auto& [name, spec] : f.items()) {
        const std::vector<std::string> path{"initial", "fields", name};
        p.keys(spec, path, {"preset", "modes"});
        if (spec.contains("preset") == spec.contains("modes")) p.fail(path, "give exactly one of preset or modes");
        if (c.initial.fields.count(name)) p.fail(path, "field also set by initial.modes");
        presets::FieldInit fi;
        if (spec.contains("preset"))
          fi.preset = p.string(spec["preset"], {"initial", "fields", name, "preset"});
        else
          fi.modes = parse_modes(p, spec["modes"], {"initial", "fields", name, "modes"}, domain);
        c.initial.fields[name] = fi;
      }
    }
    if (in.contains("vector")) {
      if (domain != Domain::Algebra) p.fail({"initial", "vector"}, "only the rigid body takes a vector");
      const Json& v = in["vector"];
      if (!v.is_array()) p.fail({"initial", "vector"}, "expected an array of numbers");
      std::vector<double> vec;
      for (const Json& x : v) vec.push_back(p.number(x, {"initial", "vector"}));
      c.initial.vector = vec;
    }
  }

  if (!j.contains("time")) throw ConfigError("missing required key \"time\"", 1);
  {
    const Json& t = j["time"];
    p.keys(t, {"time"}, {"t_final", "dt", "cfl", "stride"});
    if (t.contains("t_final")) c.time.t_final = p.number(t["t_final"], {"time", "t_final"});
    if (t.contains("dt")) c.time.dt = p.number(t["dt"], {"time", "dt"});
    if (t.contains("cfl")) c.time.cfl = p.number(t["cfl"], {"time", "cfl"});
    if (t.contains("stride")) c.time.stride = static_cast<int>(p.integer(t["stride"], {"time", "stride"}));
    try {
      integrators::validate(stepper_config(c));
    } catch (const ContractError& e) {
      p.fail({"time"}, e.what());
    }
  }

  if (j.contains("output")) {
    const Json& o = j["output"];
    p.keys(o, {"output"}, {"directory", "fields", "snapshots", "grid"});
    if (o.contains("directory")) {
      c.output.directory = p.string(o["directory"], {"output", "directory"});
      if (c.output.directory.empty()) p.fail({"output", "directory"}, "must not be empty");
    }
    if (o.contains("fields")) {
      const Json& f = o["fields"];
      if (!f.is_array()) p.fail({"output", "fields"}, "expected an array of field names");
      const auto legal = snapshot_fields(id);
      for (const Json& x : f) {
        const std::string name = p.string(x, {"output", "fields"});
        if (std::find(legal.begin(), legal.end(), name) == legal.end()) {
          std::string list;
          for (const auto& l : legal) list += (list.empty() ? "" : ", ") + l;
          p.fail({"output", "fields"}, "unknown field '" + name + "' (expected one of: " + list + ")");
        }
        c.output.fields.push_back(name);
      }
    }
    if (o.contains("snapshots")) {
      const std::string s = p.string(o["snapshots"], {"output", "snapshots"});
      if (s == "none") c.output.snapshots = SnapshotPolicy::None;
      else if (s == "final") c.output.snapshots = SnapshotPolicy::Final;
      else if (s == "all") c.output.snapshots = SnapshotPolicy::All;
      else p.fail({"output", "snapshots"}, "expected none, final or all");
    }
    if (o.contains("grid")) {
      if (!o["grid"].is_boolean()) p.fail({"output", "grid"}, "expected true or false");
      c.output.grid = o["grid"].get<bool>();
    }
  }

  // Semantic check of the whole model setup: parameters and initial data.
  try {
    const models::ModelSpec spec = model_spec(c);
    models::validate(spec, presets::initial_state(spec, c.initial, c.grid));
  } catch (const ContractError& e) {
    p.fail({j.contains("initial") ? "initial" : "model"}, e.what());
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string dump_config(const RunConfig& c) {
  const ModelId id = models::parse_model(c.model);
  const Domain domain = models::info(id).domain;
  Json j;
  j["model"] = c.model;
  if (domain == Domain::Circle)
    j["grid"] = {{"n", c.grid.n}};
  else if (domain == Domain::Torus)
    j["grid"] = {{"nx", c.grid.nx}, {"ny", c.grid.ny}};
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  j["params"] = params;
  Json in;
  in["preset"] = c.initial.preset;
  in["seed"] = c.initial.seed;
  in["amplitude"] = c.initial.amplitude;
  if (!c.initial.fields.empty()) {
    Json fields = Json::object();
    for (const auto& [name, fi] : c.initial.fields) {
      if (fi.preset)
        fields[name] = {{"preset", *fi.preset}};
      else
        fields[name] = {{"modes", dump_modes(fi.modes, domain)}};
    }
    in["fields"] = fields;
  }
  if (c.initial.vector) in["vector"] = *c.initial.vector;
  j["initial"] = in;
  Json t;
  t["t_final"] = c.time.t_final;
  if (c.time.dt) t["dt"] = *c.time.dt;
  if (c.time.cfl) t["cfl"] = *c.time.cfl;
  t["stride"] = c.time.stride;
  j["time"] = t;
  j["output"] = {{"directory", c.output.directory},
                 {"fields", c.output.fields},
                 {"snapshots", std::string(snapshot_policy_name(c.output.snapshots))},
                 {"grid", c.output.grid}};
  return j.dump(2) + "\n";
}

}  // namespace ea::config

// Copyright 2026 The casimir-spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace casimir::cli {
namespace {

using nlohmann::json;

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config field '" + path + "': " + what);
}

// Reads the members of one JSON object, remembering which keys were used
// so that leftovers (usually typos) can be reported.
class ObjectReader {
 public:
  ObjectReader(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) fail(path_.empty() ? "<root>" : path_, "expected an object");
  }

  bool has(const std::string& key) const { return node_.contains(key); }

  const json* get(const std::string& key) {
    seen_.insert(key);
    const auto it = node_.find(key);
    return it == node_.end() ? nullptr : &*it;
  }

  std::optional<double> number(const std::string& key) {
    const json* v = get(key);
    if (!v) return std::nullopt;
    if (!v->is_number()) fail(join(path_, key), "expected a number");
    const double x = v->get<double>();
    if (!std::isfinite(x)) fail(join(path_, key), "must be finite");
    return x;
  }

  double number(const std::string& key, double fallback) {
    return number(key).value_or(fallback);
  }

  std::optional<std::string> text(const std::string& key) {
    const json* v = get(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) fail(join(path_, key), "expected a string");
    return v->get<std::string>();
  }

  std::vector<double> numbers(const std::string& key) {
    const json* v = get(key);
    if (!v) return {};
    if (v->is_number()) return {v->get<double>()};
    if (!v->is_array()) fail(join(path_, key), "expected a number or an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v->size(); ++i) {
      const json& e = (*v)[i];
      if (!e.is_number() || !std::isfinite(e.get<double>())) {
        fail(join(path_, key) + "[" + std::to_string(i) + "]", "expected a finite number");
      }
      out.push_back(e.get<double>());
    }
    return out;
  }

  void require(const std::string& key, bool ok, const std::string& what) const {
    if (!ok) fail(join(path_, key), what);
  }

  const std::string& path() const { return path_; }

  void finish() const {
    for (const auto& [key, _] : node_.items()) {
      if (!seen_.count(key)) fail(join(path_, key), "unknown field");
    }
  }

 private:
  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

template <typename Enum>
Enum choose(const std::string& path, const std::string& value,
            std::initializer_list<std::pair<const char*, Enum>> options) {
  std::string names;
  for (const auto& [name, e] : options) {
    if (value == name) return e;
    names += names.empty() ? name : std::string(", ") + name;
  }
  fail(path, "unknown value '" + value + "' (expected one of: " + names + ")");
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

void read_mirror(ObjectReader& root, RunConfig& cfg) {
  const json* node = root.get("mirror");
  if (!node) return;
  ObjectReader r(*node, "mirror");
  cfg.mu0 = r.number("mu0", cfg.mu0);
  cfg.lambda0 = r.number("lambda0", cfg.lambda0);
  r.require("mu0", cfg.mu0 > 0.0, "must be > 0");
  r.finish();
}

void read_drive(ObjectReader& root, RunConfig& cfg) {
  const json* node = root.get("drive");
  if (!node) return;
  ObjectReader r(*node, "drive");
  DriveSpec& d = cfg.drive;
  if (auto mode = r.text("mode")) {
    d.mode = choose<DriveMode>("drive.mode", *mode,
                               {{"mono", DriveMode::kMono}, {"general", DriveMode::kGeneral}});
  }
  d.omega0 = r.number("omega0", d.omega0);
  d.omega1 = r.number("omega1", d.omega0);
  d.omega2 = r.number("omega2", d.omega0);
  d.phi = r.number("phi", d.phi);
  d.eps = r.number("eps", d.eps);
  d.eps_f = r.number("eps_f");
  d.eps_g = r.number("eps_g");
  d.tau = r.number("tau", d.tau);
  r.require("omega0", d.omega0 > 0.0, "must be > 0");
  r.require("omega1", d.omega1 > 0.0, "must be > 0");
  r.require("omega2", d.omega2 > 0.0, "must be > 0");
  r.require("eps", d.eps >= 0.0, "must be >= 0");
  r.require("eps_f", d.eps_f.value_or(0.0) >= 0.0, "must be >= 0");
  r.require("eps_g", d.eps_g.value_or(0.0) >= 0.0, "must be >= 0");
  r.require("tau", d.tau > 0.0, "must be > 0");
  r.finish();
}

void read_sources(ObjectReader& root, RunConfig& cfg) {
  const json* node = root.get("sources");
  if (!node) return;
  if (!node->is_array()) fail("sources", "expected an array of objects");
  for (std::size_t i = 0; i < node->size(); ++i) {
    ObjectReader r((*node)[i], "sources[" + std::to_string(i) + "]");
    Source s;
    s.eps = r.number("eps", 1.0);
    s.omega = r.number("omega", cfg.drive.omega0);
    s.phi = r.number("phi", 0.0);
    r.require("eps", s.eps >= 0.0, "must be >= 0");
    r.require("omega", s.omega > 0.0, "must be > 0");
    r.finish();
    cfg.sources.push_back(s);
  }
}

void read_grid(ObjectReader& root, RunConfig& cfg) {
  const json* node = root.get("grid");
  if (!node) return;
  ObjectReader r(*node, "grid");
  GridSpec& g = cfg.grid;
  g.omega_min = r.number("omega_min");
  g.omega_max = r.number("omega_max");
  if (const json* p = r.get("points")) {
    if (!p->is_number_integer()) fail("grid.points", "expected an integer");
    g.points = p->get<int>();
  }
  if (auto spacing = r.text("spacing")) {
    g.spacing = choose<Spacing>("grid.spacing", *spacing,
                                {{"linear", Spacing::kLinear}, {"log", Spacing::kLog}});
  }
  r.require("points", g.points >= 2, "must be >= 2");
  r.require("omega_min", g.omega_min.value_or(0.0) >= 0.0, "must be >= 0");
  if (g.omega_min && g.omega_max) {
    r.require("omega_max", *g.omega_max > *g.omega_min, "must exceed grid.omega_min");
  }
  if (g.spacing == Spacing::kLog && g.omega_min) {
    r.require("omega_min", *g.omega_min > 0.0, "must be > 0 for log spacing");
  }
  r.finish();
}

void read_tolerances(ObjectReader& root, RunConfig& cfg) {
  const json* node = root.get("tolerances");
  if (!node) return;
  ObjectReader r(*node, "tolerances");
  cfg.tolerances.rate_rel = r.number("rate_rel", cfg.tolerances.rate_rel);
  cfg.tolerances.general_rel = r.number("general_rel", cfg.tolerances.general_rel);
  r.require("rate_rel", cfg.tolerances.rate_rel > 0.0, "must be > 0");
  r.require("general_rel", cfg.tolerances.general_rel > 0.0, "must be > 0");
  r.finish();
}

void read_sweep(ObjectReader& root, RunConfig& cfg) {
  const json* node = root.get("sweep");
  if (!node) return;
  ObjectReader r(*node, "sweep");
  SweepSpec s;
  s.mu0 = r.numbers("mu0");
  s.lambda0 = r.numbers("lambda0");
  s.omega0 = r.numbers("omega0");
  s.phi = r.numbers("phi");
  r.require("mu0", std::all_of(s.mu0.begin(), s.mu0.end(), [](double x) { return x > 0.0; }),
            "values must be > 0");
  r.require("omega0",
            std::all_of(s.omega0.begin(), s.omega0.end(), [](double x) { return x > 0.0; }),
            "values must be > 0");
  r.finish();
  cfg.sweep = std::move(s);
}

void read_outputs(ObjectReader& root, RunConfig& cfg) {
  const json* node = root.get("outputs");
  if (!node) return;
  static const std::set<std::string> known = {"spectrum", "diff", "rates", "roots", "enhance"};
  if (!node->is_array()) fail("outputs", "expected an array of strings");
  for (std::size_t i = 0; i < node->size(); ++i) {
    const json& e = (*node)[i];
    const std::string path = "outputs[" + std::to_string(i) + "]";
    if (!e.is_string()) fail(path, "expected a string");
    if (!known.count(e.get<std::string>())) {
      fail(path, "unknown output '" + e.get<std::string>() +
                     "' (expected spectrum, diff, rates, roots or enhance)");
    }
    cfg.outputs.push_back(e.get<std::string>());
  }
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    std::string what = e.what();
    if (const auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw ConfigError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                      what);
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("--set expects key=value, got '" + assignment + "'");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  json value = json::parse(raw, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) value = raw;

  json* node = &doc;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string segment = key.substr(start, dot == std::string::npos ? dot : dot - start);
    if (segment.empty()) throw ConfigError("--set key '" + key + "' has an empty segment");
    const bool index = std::all_of(segment.begin(), segment.end(),
                                   [](char c) { return c >= '0' && c <= '9'; });
    json* next = nullptr;
    if (index && node->is_array()) {
      const std::size_t i = std::stoul(segment);
      if (i >= node->size()) {
        throw ConfigError("--set key '" + key + "': index " + segment + " is out of range");
      }
      next = &(*node)[i];
    } else {
      if (node->is_null()) *node = json::object();
      if (!node->is_object()) {
        throw ConfigError("--set key '" + key + "': '" + segment + "' is not inside an object");
      }
      next = &(*node)[segment];
    }
    if (dot == std::string::npos) {
      *next = std::move(value);
      return;
    }
    node = next;
    start = dot + 1;
  }
}

RunConfig parse_config(const json& doc) {
  RunConfig cfg;
  ObjectReader root(doc, "");
  read_mirror(root, cfg);
  read_drive(root, cfg);
  read_sources(root, cfg);
  read_grid(root, cfg);
  read_tolerances(root, cfg);
  read_sweep(root, cfg);
  read_outputs(root, cfg);
  if (auto n = root.text("normalization")) {
    cfg.normalization = choose<Normalization>(
        "normalization", *n, {{"per_tau", Normalization::kPerTau}, {"figure", Normalization::kFigure}});
  }
  if (auto m = root.text("measure")) {
    cfg.measure = choose<SpectralMeasure>(
        "measure", *m, {{"angular", SpectralMeasure::kAngular}, {"cyclic", SpectralMeasure::kCyclic}});
  }
  root.finish();
  return cfg;
}

json to_json(const RunConfig& cfg) {
  json drive = {
      {"mode", cfg.drive.mode == DriveMode::kMono ? "mono" : "general"},
      {"omega0", cfg.drive.omega0},
      {"omega1", cfg.drive.omega1},
      {"omega2", cfg.drive.omega2},
      {"phi", cfg.drive.phi},
      {"eps", cfg.drive.eps},
      {"eps_f", cfg.drive.eps_f.value_or(cfg.drive.eps)},
      {"eps_g", cfg.drive.eps_g.value_or(cfg.drive.eps)},
      {"tau", cfg.drive.tau},
  };
  json grid = {{"points", cfg.grid.points},
               {"spacing", cfg.grid.spacing == Spacing::kLinear ? "linear" : "log"}};
  if (cfg.grid.omega_min) grid["omega_min"] = *cfg.grid.omega_min;
  if (cfg.grid.omega_max) grid["omega_max"] = *cfg.grid.omega_max;
  json sources = json::array();
  for (const Source& s : cfg.sources) {
    sources.push_back({{"eps", s.eps}, {"omega", s.omega}, {"phi", s.phi}});
  }
  json out = {
      {"mirror", {{"mu0", cfg.mu0}, {"lambda0", cfg.lambda0}}},
      {"drive", drive},
      {"grid", grid},
      {"sources", sources},
      {"tolerances",
       {{"rate_rel", cfg.tolerances.rate_rel}, {"general_rel", cfg.tolerances.general_rel}}},
      {"normalization", cfg.normalization == Normalization::kPerTau ? "per_tau" : "figure"},
      {"measure", cfg.measure == SpectralMeasure::kAngular ? "angular" : "cyclic"},
      {"outputs", cfg.outputs},
  };
  if (cfg.sweep) {
    out["sweep"] = {{"mu0", cfg.sweep->mu0},
                    {"lambda0", cfg.sweep->lambda0},
                    {"omega0", cfg.sweep->omega0},
                    {"phi", cfg.sweep->phi}};
  }
  return out;
}

}  // namespace casimir::cli

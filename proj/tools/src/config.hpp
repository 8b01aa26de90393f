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
#ifndef CASIMIR_TOOLS_CONFIG_HPP_
#define CASIMIR_TOOLS_CONFIG_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/enhancement.hpp"
#include "casimir/rates.hpp"
#include "json.hpp"

namespace casimir::cli {

/// Invalid input. The message names the offending field or file position.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DriveMode { kMono, kGeneral };
enum class Spacing { kLinear, kLog };
enum class Normalization { kPerTau, kFigure };

struct DriveSpec {
  DriveMode mode = DriveMode::kMono;
  double omega0 = 1.0;
  double omega1 = 1.0;  // coupling drive (general mode)
  double omega2 = 1.0;  // motion drive (general mode)
  double phi = 0.0;
  double eps = 1.0;
  std::optional<double> eps_f;  // coupling amplitude, defaults to eps
  std::optional<double> eps_g;  // motion amplitude, defaults to eps
  double tau = 1.0;
};

struct GridSpec {
  std::optional<double> omega_min;
  std::optional<double> omega_max;
  int points = 201;
  Spacing spacing = Spacing::kLinear;
};

struct SweepSpec {
  std::vector<double> mu0;
  std::vector<double> lambda0;
  std::vector<double> omega0;
  std::vector<double> phi;
};

struct Tolerances {
  double rate_rel = 1e-9;
  double general_rel = 1e-6;
};

struct RunConfig {
  double mu0 = 1.0;
  double lambda0 = 0.0;
  DriveSpec drive;
  std::vector<Source> sources;
  GridSpec grid;
  Tolerances tolerances;
  Normalization normalization = Normalization::kPerTau;
  SpectralMeasure measure = SpectralMeasure::kAngular;
  std::optional<SweepSpec> sweep;
  std::vector<std::string> outputs;
};

/// Reads a JSON document; parse errors report line and column.
nlohmann::json load_json_file(const std::string& path);
nlohmann::json parse_json_text(const std::string& text, const std::string& origin);

/// Applies "a.b.c=value". The value is read as JSON when it parses, as a
/// plain string otherwise. Numeric segments index into arrays.
void apply_override(nlohmann::json& doc, const std::string& assignment);

/// Validates and converts. Unknown keys are rejected.
RunConfig parse_config(const nlohmann::json& doc);

/// The fully defaulted configuration, as echoed into output metadata.
nlohmann::json to_json(const RunConfig& cfg);

}  // namespace casimir::cli

#endif  // CASIMIR_TOOLS_CONFIG_HPP_

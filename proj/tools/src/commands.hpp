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
#ifndef CASIMIR_TOOLS_COMMANDS_HPP_
#define CASIMIR_TOOLS_COMMANDS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "csv.hpp"

namespace casimir::cli {

enum class Command { kSpectrum, kDiff, kRates, kRoots, kEnhance, kSweep };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command command);

/// One point of the (mu0, lambda0, omega0, phi) grid.
struct ParameterPoint {
  double mu0 = 1.0;
  double lambda0 = 0.0;
  double omega0 = 1.0;
  double phi = 0.0;
};

/// Cartesian product of the sweep lists, mu0 outermost and phi innermost.
/// Without a sweep block, the single point taken from mirror and drive.
std::vector<ParameterPoint> parameter_points(const RunConfig& cfg);

/// Frequency grid for one curve; omega_max defaults to the given cutoff.
std::vector<double> frequency_grid(const GridSpec& grid, double default_max);

struct CommandOutput {
  CsvDocument csv;
  std::vector<std::string> warnings;
};

/// Runs a command. Throws ConfigError for invalid combinations and
/// NumericalError (or a casimir::Error) when a computation fails.
/// `threads` caps sweep concurrency; 0 picks the hardware default.
CommandOutput run_command(Command command, const RunConfig& cfg, unsigned threads = 0);

/// CASIMIR_SPECTRA_THREADS if set to a positive integer, 0 otherwise.
unsigned threads_from_environment();

}  // namespace casimir::cli

#endif  // CASIMIR_TOOLS_COMMANDS_HPP_

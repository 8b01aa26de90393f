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
// casimir-spectra command-line front end.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "casimir/errors.hpp"
#include "commands.hpp"
#include "config.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace casimir::cli;

  CLI::App app{"Particle-creation spectra for a moving, fluctuating delta/delta-prime mirror"};
  app.set_version_flag("--version", std::string(CASIMIR_SPECTRA_VERSION));
  std::string command_name;
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;
  app.add_option("command", command_name, "spectrum | diff | rates | roots | enhance | sweep")
      ->required();
  app.add_option("--config", config_path, "JSON configuration file")->required();
  app.add_option("--set", overrides, "Override a config field: dotted.key=value (repeatable)");
  app.add_option("--out", out_path, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const auto command = parse_command(command_name);
  if (!command) {
    std::cerr << "error: unknown command '" << command_name
              << "' (expected spectrum, diff, rates, roots, enhance or sweep)\n";
    return kExitConfig;
  }

  std::string text;
  try {
    auto doc = load_json_file(config_path);
    for (const auto& o : overrides) apply_override(doc, o);
    const RunConfig cfg = parse_config(doc);
    const CommandOutput result = run_command(*command, cfg, threads_from_environment());
    text = result.csv.render();
    for (const auto& w : result.warnings) std::cerr << w << "\n";
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const casimir::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const casimir::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }

  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return std::cout ? kExitOk : kExitNumerical;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitConfig;
  }
  return kExitOk;
}

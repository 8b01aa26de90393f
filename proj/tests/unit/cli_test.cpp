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
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "casimir/errors.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "csv.hpp"

namespace casimir::cli {
namespace {

using nlohmann::json;
using std::numbers::pi;

RunConfig Parse(const std::string& text, std::initializer_list<std::string> sets = {}) {
  json doc = parse_json_text(text, "<test>");
  for (const auto& s : sets) apply_override(doc, s);
  return parse_config(doc);
}

// Data rows of a rendered CSV, keyed by column name.
std::vector<std::map<std::string, std::string>> Rows(const CsvDocument& csv) {
  std::istringstream in(csv.render());
  std::string line;
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (header.empty()) {
      header = cells;
      continue;
    }
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = cells.at(i);
    rows.push_back(row);
  }
  return rows;
}

double Num(const std::map<std::string, std::string>& row, const std::string& key) {
  return std::stod(row.at(key));
}

const char* kMono = R"({"mirror": {"mu0": 1, "lambda0": 1},
                        "drive": {"omega0": 2, "phi": 0, "eps": 1, "tau": 1},
                        "grid": {"points": 41}})";

TEST(FormatNumberTest, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1e-300), "1e-300");
  EXPECT_EQ(format_number(NAN), "nan");
  for (double x : {1.0 / 3.0, pi, 2.231092174491331, 6.02214076e23, -1.5e-17}) {
    const std::string s = format_number(x);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    EXPECT_EQ(back, x) << s;
  }
}

TEST(CsvDocumentTest, RendersCommentsHeaderAndRows) {
  CsvDocument csv;
  csv.comment("hello");
  csv.set_columns({"a", "b"});
  csv.add_row({1.5, std::string("x")});
  EXPECT_EQ(csv.render(), "# hello\na,b\n1.5,x\n");
  EXPECT_THROW(csv.add_row({1.0}), std::logic_error);
}

TEST(CsvDocumentTest, NonFiniteIsNumericalError) {
  CsvDocument csv;
  csv.set_columns({"a", "b"});
  csv.add_row({1.0, NAN});
  try {
    (void)csv.render();
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("'b'"), std::string::npos);
  }
}

TEST(OverrideTest, DottedKeysAndValueTypes) {
  json doc = json::parse(R"({"mirror": {"mu0": 1}, "sources": [{"eps": 1}]})");
  apply_override(doc, "mirror.mu0=2.5");
  apply_override(doc, "drive.mode=general");
  apply_override(doc, "sources.0.phi=3");
  apply_override(doc, "sweep.phi=[0, 1]");
  EXPECT_EQ(doc["mirror"]["mu0"], 2.5);
  EXPECT_EQ(doc["drive"]["mode"], "general");
  EXPECT_EQ(doc["sources"][0]["phi"], 3);
  EXPECT_EQ(doc["sweep"]["phi"].size(), 2u);
  EXPECT_THROW(apply_override(doc, "novalue"), ConfigError);
  EXPECT_THROW(apply_override(doc, "mirror..mu0=1"), ConfigError);
  EXPECT_THROW(apply_override(doc, "sources.5.eps=1"), ConfigError);
  EXPECT_THROW(apply_override(doc, "mirror.mu0.x=1"), ConfigError);
}

TEST(ConfigTest, DefaultsAndEcho) {
  const RunConfig cfg = Parse("{}");
  EXPECT_EQ(cfg.mu0, 1.0);
  EXPECT_EQ(cfg.drive.mode, DriveMode::kMono);
  EXPECT_EQ(cfg.grid.points, 201);
  const RunConfig again = parse_config(to_json(Parse(kMono)));
  EXPECT_EQ(to_json(again), to_json(Parse(kMono)));
}

TEST(ConfigTest, DiagnosticsNameTheField) {
  const auto message = [](const std::string& text) {
    try {
      Parse(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(R"({"mirror": {"mu0": 0}})").find("mirror.mu0"), std::string::npos);
  EXPECT_NE(message(R"({"grid": {"points": 1}})").find("grid.points"), std::string::npos);
  EXPECT_NE(message(R"({"drive": {"tua": 1}})").find("drive.tua"), std::string::npos);
  EXPECT_NE(message(R"({"drive": {"mode": "fast"}})").find("drive.mode"), std::string::npos);
  EXPECT_NE(message(R"({"sources": [{"eps": -1}]})").find("sources[0].eps"), std::string::npos);
  EXPECT_NE(message(R"({"outputs": ["plot"]})").find("outputs[0]"), std::string::npos);
  EXPECT_NE(message(R"({"grid": {"spacing": "log", "omega_min": 0}})").find("grid.omega_min"),
            std::string::npos);
}

TEST(ConfigTest, ParseErrorsCarryLineAndColumn) {
  try {
    parse_json_text("{\n  \"a\": 1,\n  }", "cfg.json");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("cfg.json:3:", 0), 0u) << e.what();
  }
}

TEST(GridTest, LinearAndLog) {
  GridSpec g;
  g.points = 5;
  EXPECT_EQ(frequency_grid(g, 2.0), (std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0}));
  g.spacing = Spacing::kLog;
  g.omega_min = 0.01;
  g.omega_max = 100.0;
  const auto w = frequency_grid(g, 1.0);
  EXPECT_NEAR(w[2], 1.0, 1e-14);
  EXPECT_EQ(w.back(), 100.0);
  g.omega_max = 0.001;
  EXPECT_THROW(frequency_grid(g, 1.0), ConfigError);
}

TEST(SweepTest, CartesianOrder) {
  const RunConfig cfg = Parse(
      R"({"sweep": {"mu0": [1, 2], "lambda0": [0.5, 2], "omega0": [1, 3], "phi": [0, 1]}})");
  const auto points = parameter_points(cfg);
  ASSERT_EQ(points.size(), 16u);
  EXPECT_EQ(points[1].phi, 1.0);
  EXPECT_EQ(points[2].omega0, 3.0);
  EXPECT_EQ(points[15].mu0, 2.0);
}

TEST(SpectrumCommandTest, CutoffTailRowsAreZero) {
  const auto out = run_command(Command::kSpectrum, Parse(kMono, {"grid.omega_max=3", "grid.points=31"}));
  const auto rows = Rows(out.csv);
  ASSERT_EQ(rows.size(), 62u);
  for (const auto& row : rows) {
    if (Num(row, "omega") >= 2.0) EXPECT_EQ(Num(row, "n_total"), 0.0);
    EXPECT_EQ(row.at("per_tau"), "1");
  }
}

TEST(SpectrumCommandTest, FigureNormalization) {
  const auto plain = Rows(run_command(Command::kSpectrum, Parse(kMono, {"drive.eps=0.3"})).csv);
  const auto fig = Rows(
      run_command(Command::kSpectrum, Parse(kMono, {"drive.eps=0.3", "normalization=\"figure\""})).csv);
  ASSERT_EQ(plain.size(), fig.size());
  for (std::size_t i = 0; i < plain.size(); ++i) {
    EXPECT_NEAR(Num(fig[i], "n_int"), Num(plain[i], "n_int") * pi / (2 * 0.09), 1e-12);
  }
}

TEST(SpectrumCommandTest, WeakCouplingWarning) {
  const auto out = run_command(Command::kSpectrum, Parse(kMono, {"mirror.mu0=0.5"}));
  ASSERT_EQ(out.warnings.size(), 1u);
  EXPECT_NE(out.csv.render().find("# warning: mu0 < 1"), std::string::npos);
  EXPECT_TRUE(run_command(Command::kSpectrum, Parse(kMono)).warnings.empty());
}

TEST(DiffCommandTest, TotalResonanceAtUnitFrequency) {
  for (const auto& row : Rows(run_command(Command::kDiff, Parse(kMono, {"drive.omega0=1"})).csv)) {
    EXPECT_NEAR(Num(row, "d_q") + Num(row, "d_mu"), 0.0, 1e-12);
  }
}

TEST(DiffCommandTest, SymmetricMirrorInQuadratureIsFlat) {
  const auto cfg = Parse(kMono, {"mirror.lambda0=0", "drive.phi=" + format_number(pi / 2)});
  for (const auto& row : Rows(run_command(Command::kDiff, cfg).csv)) {
    for (const char* c : {"d_q", "d_mu", "d_int", "d_total"}) EXPECT_NEAR(Num(row, c), 0.0, 1e-16);
  }
}

TEST(DiffCommandTest, RejectsGeneralDrive) {
  EXPECT_THROW(run_command(Command::kDiff, Parse(kMono, {"drive.mode=general"})), ConfigError);
}

TEST(RatesCommandTest, FlagsAndQuadraturePhase) {
  const auto out = run_command(Command::kRates, Parse(kMono, {"drive.phi=" + format_number(pi / 2)}));
  const auto rows = Rows(out.csv);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(Num(rows[0], "n_int"), 0.0, 1e-12);
  EXPECT_EQ(rows[0].at("method_q"), "quadrature");
  EXPECT_EQ(rows[0].at("method_mu"), "closed_form");
  EXPECT_NE(out.csv.render().find("# component"), std::string::npos);
}

TEST(RootsCommandTest, PairsAndNoneMarkers) {
  auto rows = Rows(run_command(Command::kRoots, Parse(kMono)).csv);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(Num(rows[0], "spectrum_root_lo"), 0.134, 1e-3);
  EXPECT_NEAR(Num(rows[0], "diff_root_hi"), 1.866, 1e-3);
  EXPECT_NEAR(Num(rows[0], "xi_star"), 2.23, 0.01);
  rows = Rows(run_command(Command::kRoots, Parse(kMono, {"mirror.lambda0=0.3"})).csv);
  for (const char* c : {"spectrum_root_lo", "spectrum_root_hi", "diff_root_lo", "diff_root_hi"}) {
    EXPECT_EQ(rows[0].at(c), "none");
  }
}

std::string Sources(int n, double phi_step, double omega = 2.0) {
  json s = json::array();
  for (int i = 0; i < n; ++i) s.push_back({{"eps", 1.0}, {"omega", omega}, {"phi", i * phi_step}});
  return "sources=" + s.dump();
}

TEST(EnhanceCommandTest, InPhasePeakRatios) {
  std::vector<double> peaks;
  for (int n : {1, 2, 4}) {
    double peak = 0.0;
    for (const auto& row : Rows(run_command(Command::kEnhance, Parse(kMono, {Sources(n, 0.0)})).csv)) {
      peak = std::min(peak, Num(row, "d_mu"));
    }
    peaks.push_back(peak);
  }
  EXPECT_NEAR(peaks[1] / peaks[0], 4.0, 1e-12);
  EXPECT_NEAR(peaks[2] / peaks[0], 16.0, 1e-12);
}

TEST(EnhanceCommandTest, AntiAlignedPairGivesZeroColumn) {
  for (const auto& row : Rows(run_command(Command::kEnhance, Parse(kMono, {Sources(2, pi)})).csv)) {
    EXPECT_EQ(Num(row, "d_mu"), 0.0);
  }
}

TEST(EnhanceCommandTest, UnequalFrequenciesShowTwoCutoffs) {
  const auto cfg = Parse(kMono, {R"(sources=[{"omega": 1}, {"omega": 2}])", "grid.points=201"});
  const auto rows = Rows(run_command(Command::kEnhance, cfg).csv);
  EXPECT_EQ(Num(rows.back(), "omega"), 2.0);
  // The slope of n_mu_right jumps where the lower-frequency term cuts off.
  double below = 0.0, above = 0.0;
  for (const auto& row : rows) {
    if (std::abs(Num(row, "omega") - 0.99) < 1e-9) below = Num(row, "n_mu_right");
    if (std::abs(Num(row, "omega") - 1.01) < 1e-9) above = Num(row, "n_mu_right");
  }
  EXPECT_GT(below, 0.0);
  EXPECT_GT(above, 0.0);
  EXPECT_EQ(Num(rows.back(), "n_mu_right"), 0.0);
  EXPECT_THROW(run_command(Command::kEnhance, Parse(kMono)), ConfigError);
}

const char* kSweep = R"({"grid": {"points": 51},
  "sweep": {"mu0": [1, 2], "lambda0": [0.5, 2], "omega0": [1, 3], "phi": [0, 1]}})";

TEST(SweepCommandTest, SixteenRowsWithResiduals) {
  const auto rows = Rows(run_command(Command::kSweep, Parse(kSweep)).csv);
  ASSERT_EQ(rows.size(), 16u);
  for (const auto& row : rows) {
    EXPECT_LE(Num(row, "resonance_residual"), 1e-12);
    EXPECT_LE(Num(row, "double_slit_residual"), 1e-12);
    EXPECT_LE(Num(row, "product_form_residual"), 1e-12);
    EXPECT_LE(Num(row, "symmetry_residual"), 1e-12);
    EXPECT_GE(Num(row, "min_n_total"), -1e-12);
  }
}

TEST(SweepCommandTest, OutputIndependentOfThreadCount) {
  const auto cfg = Parse(kSweep);
  const std::string one = run_command(Command::kSweep, cfg, 1).csv.render();
  EXPECT_EQ(one, run_command(Command::kSweep, cfg, 4).csv.render());
  EXPECT_EQ(one, run_command(Command::kSweep, cfg, 16).csv.render());
}

TEST(SweepCommandTest, NonFiniteValuesFail) {
  // Overflowing couplings either break the rate quadrature or leave NaN cells;
  // both must surface as errors rather than as CSV text.
  for (const char* outputs : {"outputs=[\"rates\"]", "outputs=[\"roots\"]"}) {
    bool failed = false;
    try {
      (void)run_command(Command::kSweep, Parse(kSweep, {"sweep.mu0=[1e200]", outputs})).csv.render();
    } catch (const NumericalError&) {
      failed = true;
    } catch (const casimir::Error&) {
      failed = true;
    }
    EXPECT_TRUE(failed) << outputs;
  }
}

TEST(CommandNamesTest, RoundTrip) {
  for (const char* name : {"spectrum", "diff", "rates", "roots", "enhance", "sweep"}) {
    const auto c = parse_command(name);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(to_string(*c), name);
  }
  EXPECT_FALSE(parse_command("plot").has_value());
}

}  // namespace
}  // namespace casimir::cli

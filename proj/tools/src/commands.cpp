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
#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <thread>

#include "casimir/asymmetry.hpp"
#include "casimir/enhancement.hpp"
#include "casimir/rates.hpp"
#include "casimir/spectrum.hpp"

#ifndef CASIMIR_SPECTRA_VERSION
#define CASIMIR_SPECTRA_VERSION "unknown"
#endif

namespace casimir::cli {
namespace {

using std::numbers::pi;

constexpr Side kSides[] = {Side::Left, Side::Right};
const std::string kNone = "none";

bool has_sweep(const RunConfig& cfg) { return cfg.sweep.has_value(); }

MonoConfig mono_config(const RunConfig& cfg, const ParameterPoint& p) {
  return MonoConfig::make(MirrorParams(p.mu0, p.lambda0), p.omega0, p.phi, cfg.drive.eps,
                          cfg.drive.tau);
}

std::vector<std::string> point_columns() { return {"mu0", "lambda0", "omega0", "phi"}; }

void append_point(std::vector<Cell>& row, const ParameterPoint& p) {
  row.insert(row.end(), {p.mu0, p.lambda0, p.omega0, p.phi});
}

Cell optional_cell(const std::optional<double>& x) {
  return x ? Cell{*x} : Cell{kNone};
}

void require_mono(const RunConfig& cfg, Command command) {
  if (cfg.drive.mode != DriveMode::kMono) {
    throw ConfigError("config field 'drive.mode': " + std::string(to_string(command)) +
                      " needs the locked-frequency drive (mode = mono)");
  }
}

void require_per_tau(const RunConfig& cfg, Command command) {
  if (cfg.normalization != Normalization::kPerTau) {
    throw ConfigError("config field 'normalization': 'figure' applies to spectrum and diff, not " +
                      std::string(to_string(command)));
  }
}

void write_preamble(CommandOutput& out, Command command, const RunConfig& cfg) {
  out.csv.comment(std::string("casimir-spectra ") + CASIMIR_SPECTRA_VERSION);
  out.csv.comment("command: " + std::string(to_string(command)));
  out.csv.comment("config: " + to_json(cfg).dump());
}

void warn_weak_coupling(CommandOutput& out, const std::vector<ParameterPoint>& points) {
  const bool weak = std::any_of(points.begin(), points.end(),
                                [](const ParameterPoint& p) { return p.mu0 < 1.0; });
  if (weak) {
    const std::string msg =
        "warning: mu0 < 1; the coupling-fluctuation results assume mu0 >= 1";
    out.csv.comment(msg);
    out.warnings.push_back(msg);
  }
}

// Runs f(i) for i in [0, n) on up to `threads` workers. Results keep index
// order; the lowest-index exception is rethrown.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, unsigned threads, F f) {
  std::vector<T> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned count = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  count = static_cast<unsigned>(std::min<std::size_t>(count, std::max<std::size_t>(n, 1)));
  if (count <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(work);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

CommandOutput cmd_spectrum(const RunConfig& cfg) {
  CommandOutput out;
  const auto points = parameter_points(cfg);
  write_preamble(out, Command::kSpectrum, cfg);
  warn_weak_coupling(out, points);
  const bool figure = cfg.normalization == Normalization::kFigure;
  out.csv.comment(figure ? "normalization: densities divided by 2 eps^2 tau / pi"
                         : "normalization: densities per unit tau");

  std::vector<std::string> columns = has_sweep(cfg) ? point_columns() : std::vector<std::string>{};
  for (const char* c : {"omega", "side", "n_q", "n_mu", "n_int", "n_total", "per_tau"}) {
    columns.emplace_back(c);
  }
  out.csv.set_columns(columns);

  const auto& d = cfg.drive;
  for (const ParameterPoint& p : points) {
    const double scale = figure ? pi / (2.0 * d.eps * d.eps) : 1.0;
    const bool general = d.mode == DriveMode::kGeneral;
    // A swept omega0 locks both general-mode drives to it.
    const bool locked = !general || (cfg.sweep && !cfg.sweep->omega0.empty());
    const double w1 = locked ? p.omega0 : d.omega1;
    const double w2 = locked ? p.omega0 : d.omega2;
    const double cutoff = general ? std::max(w1, w2) : p.omega0;
    const MirrorParams mirror(p.mu0, p.lambda0);
    const auto mono = mono_config(cfg, p);
    const auto f = DampedCosineDrive::make(d.eps_f.value_or(d.eps), w1, 0.0, d.tau);
    const auto g = DampedCosineDrive::make(d.eps_g.value_or(d.eps), w2, p.phi, d.tau);

    for (double w : frequency_grid(cfg.grid, cutoff)) {
      for (Side side : kSides) {
        const SpectrumComponents c =
            general ? n_general(w, side, f, g, mirror, cfg.tolerances.general_rel).scaled_per_tau(d.tau)
                    : spectrum_components(w, side, mono);
        std::vector<Cell> row;
        if (has_sweep(cfg)) append_point(row, p);
        row.insert(row.end(), {w, std::string(to_string(side)), c.n_q * scale, c.n_mu * scale,
                               c.n_int * scale, c.n_total * scale, std::string(figure ? "0" : "1")});
        out.csv.add_row(std::move(row));
      }
    }
  }
  return out;
}

CommandOutput cmd_diff(const RunConfig& cfg) {
  require_mono(cfg, Command::kDiff);
  CommandOutput out;
  const auto points = parameter_points(cfg);
  write_preamble(out, Command::kDiff, cfg);
  warn_weak_coupling(out, points);
  const bool figure = cfg.normalization == Normalization::kFigure;
  out.csv.comment(figure ? "normalization: differences divided by eps^2 tau / pi"
                         : "normalization: differences per unit tau");

  std::vector<std::string> columns = has_sweep(cfg) ? point_columns() : std::vector<std::string>{};
  for (const char* c : {"omega", "d_q", "d_mu", "d_int", "d_total"}) columns.emplace_back(c);
  out.csv.set_columns(columns);

  for (const ParameterPoint& p : points) {
    const auto mono = mono_config(cfg, p);
    const double scale = figure ? pi / (cfg.drive.eps * cfg.drive.eps) : 1.0;
    for (double w : frequency_grid(cfg.grid, p.omega0)) {
      const auto d = delta_n_total(w, mono);
      std::vector<Cell> row;
      if (has_sweep(cfg)) append_point(row, p);
      row.insert(row.end(),
                 {w, d.d_q * scale, d.d_mu * scale, d.d_int * scale, d.d_total * scale});
      out.csv.add_row(std::move(row));
    }
  }
  return out;
}

RateOptions rate_options(const RunConfig& cfg) {
  RateOptions o;
  o.rel_tol = cfg.tolerances.rate_rel;
  o.measure = cfg.measure;
  return o;
}

CommandOutput cmd_rates(const RunConfig& cfg) {
  require_mono(cfg, Command::kRates);
  require_per_tau(cfg, Command::kRates);
  CommandOutput out;
  const auto points = parameter_points(cfg);
  write_preamble(out, Command::kRates, cfg);
  warn_weak_coupling(out, points);
  out.csv.comment(std::string("measure: ") +
                  (cfg.measure == SpectralMeasure::kAngular ? "integral over d omega"
                                                            : "integral over d omega / 2 pi"));

  std::vector<std::string> columns = point_columns();
  for (const char* c : {"xi", "n_q", "n_mu", "n_int", "n_total", "rate_total", "method_q",
                        "method_mu", "method_int"}) {
    columns.emplace_back(c);
  }
  out.csv.set_columns(columns);

  for (const ParameterPoint& p : points) {
    const auto r = rate_breakdown(mono_config(cfg, p), rate_options(cfg));
    if (points.size() == 1) {
      out.csv.comment("component  number                    method");
      const auto line = [&](const char* name, double v, RateMethod m) {
        std::string s = format_number(v);
        s.resize(std::max<std::size_t>(s.size(), 24), ' ');
        std::string label = name;
        label.resize(9, ' ');
        out.csv.comment(label + "  " + s + "  " + std::string(to_string(m)));
      };
      line("q", r.n_q, r.method_q);
      line("mu", r.n_mu, r.method_mu);
      line("int", r.n_int, r.method_int);
      out.csv.comment("total      " + format_number(r.n_total) + "  (rate " +
                      format_number(r.n_total / cfg.drive.tau) + ")");
    }
    std::vector<Cell> row;
    append_point(row, p);
    row.insert(row.end(), {r.xi, r.n_q, r.n_mu, r.n_int, r.n_total, r.n_total / cfg.drive.tau,
                           std::string(to_string(r.method_q)), std::string(to_string(r.method_mu)),
                           std::string(to_string(r.method_int))});
    out.csv.add_row(std::move(row));
  }
  return out;
}

CommandOutput cmd_roots(const RunConfig& cfg) {
  require_mono(cfg, Command::kRoots);
  require_per_tau(cfg, Command::kRoots);
  CommandOutput out;
  const auto points = parameter_points(cfg);
  write_preamble(out, Command::kRoots, cfg);
  warn_weak_coupling(out, points);
  out.csv.set_columns({"mu0", "lambda0", "omega0", "phi", "spectrum_root_lo", "spectrum_root_hi",
                       "diff_root_lo", "diff_root_hi", "xi_star"});
  for (const ParameterPoint& p : points) {
    const auto mono = mono_config(cfg, p);
    const auto s = interference_roots(mono);
    const auto d = diff_roots(mono);
    std::vector<Cell> row;
    append_point(row, p);
    row.push_back(s ? Cell{s->first} : Cell{kNone});
    row.push_back(s ? Cell{s->second} : Cell{kNone});
    row.push_back(d ? Cell{d->first} : Cell{kNone});
    row.push_back(d ? Cell{d->second} : Cell{kNone});
    row.push_back(interference_null(mono.params));
    out.csv.add_row(std::move(row));
  }
  return out;
}

CommandOutput cmd_enhance(const RunConfig& cfg) {
  require_per_tau(cfg, Command::kEnhance);
  if (cfg.sources.empty()) throw ConfigError("config field 'sources': enhance needs at least one source");
  if (cfg.sweep) throw ConfigError("config field 'sweep': not supported by enhance");
  CommandOutput out;
  write_preamble(out, Command::kEnhance, cfg);
  warn_weak_coupling(out, parameter_points(cfg));
  const SourceSet set(cfg.sources, cfg.drive.tau);
  const MirrorParams mirror(cfg.mu0, cfg.lambda0);
  double top = 0.0;
  for (const Source& s : cfg.sources) top = std::max(top, s.omega);
  if (set.resonant()) {
    out.csv.comment("resonant sources: effective eps^2 = " + format_number(effective_eps_sq_n(set)));
  } else {
    out.csv.comment("sources at different frequencies: equal-frequency groups add as intensities");
  }
  out.csv.comment("normalization: densities per unit tau");
  out.csv.set_columns({"omega", "n_mu_left", "n_mu_right", "d_mu"});
  const double tau = cfg.drive.tau;
  for (double w : frequency_grid(cfg.grid, top)) {
    out.csv.add_row({w, off_resonance_spectrum(w, Side::Left, set, mirror) / tau,
                     off_resonance_spectrum(w, Side::Right, set, mirror) / tau,
                     off_resonance_delta_n_mu(w, set, mirror) / tau});
  }
  return out;
}

bool wants(const RunConfig& cfg, const char* name) {
  return cfg.outputs.empty() ||
         std::find(cfg.outputs.begin(), cfg.outputs.end(), name) != cfg.outputs.end();
}

CommandOutput cmd_sweep(const RunConfig& cfg, unsigned threads) {
  require_mono(cfg, Command::kSweep);
  require_per_tau(cfg, Command::kSweep);
  CommandOutput out;
  const auto points = parameter_points(cfg);
  write_preamble(out, Command::kSweep, cfg);
  warn_weak_coupling(out, points);

  const bool with_rates = wants(cfg, "rates");
  const bool with_roots = wants(cfg, "roots");
  std::vector<std::string> columns = point_columns();
  columns.emplace_back("xi");
  if (with_rates) {
    for (const char* c : {"n_q", "n_mu", "n_int", "n_total"}) columns.emplace_back(c);
  }
  if (with_roots) {
    for (const char* c : {"spectrum_root_lo", "spectrum_root_hi", "diff_root_lo", "diff_root_hi"}) {
      columns.emplace_back(c);
    }
  }
  for (const char* c : {"min_n_total", "symmetry_residual", "resonance_residual",
                        "double_slit_residual", "product_form_residual"}) {
    columns.emplace_back(c);
  }
  out.csv.set_columns(columns);

  const auto rows = parallel_map<std::vector<Cell>>(points.size(), threads, [&](std::size_t i) {
    const ParameterPoint& p = points[i];
    const auto mono = mono_config(cfg, p);
    std::vector<Cell> row;
    append_point(row, p);
    row.push_back(xi_of(mono));
    if (with_rates) {
      const auto r = rate_breakdown(mono, rate_options(cfg));
      row.insert(row.end(), {r.n_q, r.n_mu, r.n_int, r.n_total});
    }
    if (with_roots) {
      const auto s = interference_roots(mono);
      const auto d = diff_roots(mono);
      row.push_back(s ? Cell{s->first} : Cell{kNone});
      row.push_back(s ? Cell{s->second} : Cell{kNone});
      row.push_back(d ? Cell{d->first} : Cell{kNone});
      row.push_back(d ? Cell{d->second} : Cell{kNone});
    }

    double min_total = INFINITY, symmetry = 0.0, resonance = 0.0, slit = 0.0, product = 0.0;
    const bool asymmetric = p.lambda0 != 0.0;
    const auto worse = [](double& acc, double v) { acc = std::isnan(v) ? v : std::max(acc, v); };
    for (double w : frequency_grid(cfg.grid, p.omega0)) {
      for (Side side : kSides) {
        const auto a = spectrum_components(w, side, mono);
        const auto b = spectrum_components(p.omega0 - w, side, mono);
        min_total = std::isnan(a.n_total) ? a.n_total : std::min(min_total, a.n_total);
        if (w > 0.0 && w < p.omega0) {
          worse(symmetry, std::abs(a.n_q - b.n_q));
          worse(symmetry, std::abs(a.n_mu - b.n_mu));
          worse(symmetry, std::abs(a.n_int - b.n_int));
        }
      }
      const auto d = delta_n_total(w, mono);
      worse(resonance, std::abs(resonance_check(w, mono)));
      if (asymmetric) {
        const double rhs = 2.0 * std::abs(interference_factor(w, mono)) *
                           std::sqrt(std::abs(d.d_q * d.d_mu)) * std::abs(std::cos(p.phi));
        worse(slit, std::abs(std::abs(d.d_int) - rhs));
        worse(product, std::abs(*d.product_form - d.d_total));
      }
    }
    row.insert(row.end(), {min_total, symmetry, resonance});
    row.push_back(asymmetric ? Cell{slit} : Cell{kNone});
    row.push_back(asymmetric ? Cell{product} : Cell{kNone});
    return row;
  });
  for (auto row : rows) out.csv.add_row(std::move(row));
  return out;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::kSpectrum, Command::kDiff, Command::kRates, Command::kRoots,
                    Command::kEnhance, Command::kSweep}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Command command) {
  switch (command) {
    case Command::kSpectrum: return "spectrum";
    case Command::kDiff: return "diff";
    case Command::kRates: return "rates";
    case Command::kRoots: return "roots";
    case Command::kEnhance: return "enhance";
    case Command::kSweep: return "sweep";
  }
  return "unknown";
}

std::vector<ParameterPoint> parameter_points(const RunConfig& cfg) {
  const ParameterPoint base{cfg.mu0, cfg.lambda0, cfg.drive.omega0, cfg.drive.phi};
  if (!cfg.sweep) return {base};
  const auto or_base = [](const std::vector<double>& v, double fallback) {
    return v.empty() ? std::vector<double>{fallback} : v;
  };
  std::vector<ParameterPoint> out;
  for (double mu : or_base(cfg.sweep->mu0, base.mu0))
    for (double lambda : or_base(cfg.sweep->lambda0, base.lambda0))
      for (double w0 : or_base(cfg.sweep->omega0, base.omega0))
        for (double phi : or_base(cfg.sweep->phi, base.phi)) out.push_back({mu, lambda, w0, phi});
  return out;
}

std::vector<double> frequency_grid(const GridSpec& grid, double default_max) {
  const double hi = grid.omega_max.value_or(default_max);
  const double lo =
      grid.omega_min.value_or(grid.spacing == Spacing::kLog ? hi * 1e-3 : 0.0);
  if (!(hi > lo)) {
    throw ConfigError("config field 'grid.omega_max': must exceed grid.omega_min (" +
                      format_number(lo) + ")");
  }
  std::vector<double> out(static_cast<std::size_t>(grid.points));
  const double last = grid.points - 1;
  for (int k = 0; k < grid.points; ++k) {
    const double t = k / last;
    out[k] = grid.spacing == Spacing::kLinear ? lo + (hi - lo) * t
                                              : lo * std::pow(hi / lo, t);
  }
  out.back() = hi;
  return out;
}

CommandOutput run_command(Command command, const RunConfig& cfg, unsigned threads) {
  switch (command) {
    case Command::kSpectrum: return cmd_spectrum(cfg);
    case Command::kDiff: return cmd_diff(cfg);
    case Command::kRates: return cmd_rates(cfg);
    case Command::kRoots: return cmd_roots(cfg);
    case Command::kEnhance: return cmd_enhance(cfg);
    case Command::kSweep: return cmd_sweep(cfg, threads);
  }
  throw ConfigError("unknown command");
}

unsigned threads_from_environment() {
  const char* raw = std::getenv("CASIMIR_SPECTRA_THREADS");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v <= 0) return 0;
  return static_cast<unsigned>(std::min<long>(v, 1024));
}

}  // namespace casimir::cli

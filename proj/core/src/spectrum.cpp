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
#include "casimir/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {
namespace {

using std::numbers::pi;

// Product Upsilon(w) Upsilon(w0 - w), or nullopt outside the pair window.
std::optional<double> pair_upsilon(double omega, const MonoConfig& cfg) {
  const auto partner = mono_pair_weight(omega, cfg.omega0);
  if (!partner) return std::nullopt;
  return upsilon(omega, cfg.params) * upsilon(*partner, cfg.params);
}

}  // namespace

MonoConfig MonoConfig::make(const MirrorParams& params, double omega0, double phi, double eps,
                            double tau) {
  if (!std::isfinite(omega0) || !(omega0 > 0.0)) throw DomainError("omega0 must be > 0");
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  if (!std::isfinite(eps) || eps < 0.0) throw DomainError("eps must be >= 0");
  if (!std::isfinite(tau) || !(tau > 0.0)) throw DomainError("tau must be > 0");
  return {params, omega0, phi, eps, tau};
}

SpectrumComponents SpectrumComponents::make(double omega, Side side, double n_q, double n_mu,
                                            double n_int, bool per_tau) {
  return {omega, side, n_q, n_mu, n_int, n_q + n_mu + n_int, per_tau};
}

SpectrumComponents SpectrumComponents::scaled_per_tau(double tau) const {
  if (per_tau) return *this;
  return make(omega, side, n_q / tau, n_mu / tau, n_int / tau, true);
}

double upsilon(double omega, const MirrorParams& p) {
  const double k = p.stiffness();
  const double mu = p.mu0();
  return omega / (mu * mu + omega * omega * k * k);
}

double n_q_mono(double omega, Side side, const MonoConfig& cfg) {
  const auto partner = mono_pair_weight(omega, cfg.omega0);
  if (!partner) return 0.0;
  const double mu = cfg.params.mu0();
  const double lambda = cfg.params.lambda0();
  const double k = cfg.params.stiffness();
  const double pair = omega * *partner;
  const double tilt = 1.0 - sign_of(side) * lambda;

  const Complex numerator{8.0 * lambda * lambda * pair - 2.0 * mu * mu,
                          mu * tilt * tilt * cfg.omega0};
  const Complex denominator = Complex{omega * k, mu} * Complex{*partner * k, mu};
  return cfg.eps * cfg.eps / (4.0 * pi) * pair * (numerator / denominator).real();
}

double n_mu_mono(double omega, Side side, const MonoConfig& cfg) {
  const auto ups = pair_upsilon(omega, cfg);
  if (!ups) return 0.0;
  const double mu = cfg.params.mu0();
  const double tilt = 1.0 + sign_of(side) * cfg.params.lambda0();
  return cfg.eps * cfg.eps * mu * mu / (4.0 * pi) * tilt * tilt * cfg.params.stiffness() * *ups;
}

double n_int_mono(double omega, Side side, const MonoConfig& cfg) {
  const auto ups = pair_upsilon(omega, cfg);
  if (!ups) return 0.0;
  const double mu = cfg.params.mu0();
  const double lambda = cfg.params.lambda0();
  const double s = sign_of(side);
  const double tilt = 1.0 + s * lambda;
  const double bracket =
      s * mu * mu - 2.0 * lambda * cfg.params.stiffness() * omega * (cfg.omega0 - omega);
  return cfg.eps * cfg.eps * mu / (2.0 * pi) * tilt * tilt * bracket * *ups * std::cos(cfg.phi);
}

std::optional<std::pair<double, double>> interference_roots(const MonoConfig& cfg) {
  const double mu = cfg.params.mu0();
  const double lambda = cfg.params.lambda0();
  const double w0 = cfg.omega0;
  const double reach = lambda * cfg.params.stiffness();
  if (!(lambda > 0.0) || !(reach * w0 * w0 > 2.0 * mu * mu)) return std::nullopt;
  const double half_width = 0.5 * std::sqrt(w0 * w0 - 2.0 * mu * mu / reach);
  return std::pair{0.5 * w0 - half_width, 0.5 * w0 + half_width};
}

SpectrumComponents spectrum_components(double omega, Side side, const MonoConfig& cfg) {
  return SpectrumComponents::make(omega, side, n_q_mono(omega, side, cfg),
                                  n_mu_mono(omega, side, cfg), n_int_mono(omega, side, cfg),
                                  true);
}

SpectrumComponents n_general(double omega, Side side, const DampedCosineDrive& drive_f,
                             const DampedCosineDrive& drive_g, const MirrorParams& p,
                             double tol) {
  if (drive_f.tau != drive_g.tau) {
    throw DomainError("n_general: coupling and motion drives must share tau");
  }
  if (!(tol > 0.0)) throw DomainError("n_general: tol must be > 0");
  if (!(omega > 0.0)) return SpectrumComponents::make(omega, side, 0.0, 0.0, 0.0, false);

  const double width = 1.0 / drive_f.tau;
  const double prefactor = omega / (4.0 * pi * pi);

  // The outgoing row for incoming frequency -w'. Both Fourier factors are
  // evaluated at w + w'.
  auto rows = [&](double wp) {
    const Complex f_hat = fourier(drive_f, omega + wp);
    const Complex g_hat = fourier(drive_g, omega + wp);
    const ScatterMatrix dq = delta_s_q(omega, -wp, g_hat, drive_g.eps, p);
    const ScatterMatrix dmu = delta_s_mu(omega, -wp, f_hat, drive_f.eps, p);
    return std::pair{dq.row(side), dmu.row(side)};
  };

  // Peaks of |F(w + w')|^2 sit at w' = nu - w; the mirror-image
  // w' = nu + w is passed as well. Extra cuts at a few widths either side
  // let the first pass resolve Lorentzians far narrower than the range.
  IntegrationOptions options;
  options.rel_tol = tol;
  double reach = 0.0;
  for (double nu : {drive_f.freq, drive_g.freq}) {
    reach = std::max(reach, nu);
    for (double center : {nu - omega, nu + omega}) {
      if (!(center > 0.0)) continue;
      options.hints.push_back(center);
      for (double k : {1.0, 10.0, 100.0}) {
        options.hints.push_back(center - k * width);
        options.hints.push_back(center + k * width);
      }
    }
  }
  options.hints.push_back(reach + 50.0 * width);

  // Reference scale: the full two-channel trace. Components that vanish
  // identically on one side (|lambda0| = 1) or cancel (unequal frequencies)
  // are then resolved to tol relative to it instead of chasing rounding noise.
  const auto trace = integrate(
      [&](double wp) {
        const Complex f_hat = fourier(drive_f, omega + wp);
        const Complex g_hat = fourier(drive_g, omega + wp);
        const ScatterMatrix dq = delta_s_q(omega, -wp, g_hat, drive_g.eps, p);
        const ScatterMatrix dmu = delta_s_mu(omega, -wp, f_hat, drive_f.eps, p);
        double sum = 0.0;
        for (Side s : {Side::Right, Side::Left}) sum += norm_sq(dq.row(s)) + norm_sq(dmu.row(s));
        return prefactor / wp * sum;
      },
      0.0, kInfinity, options);
  options.abs_tol = tol * trace.value;

  const auto q = integrate(
      [&](double wp) { return prefactor / wp * norm_sq(rows(wp).first); }, 0.0, kInfinity,
      options);
  const auto mu = integrate(
      [&](double wp) { return prefactor / wp * norm_sq(rows(wp).second); }, 0.0, kInfinity,
      options);
  const auto cross = integrate(
      [&](double wp) {
        const auto [row_q, row_mu] = rows(wp);
        return prefactor / wp * 2.0 * inner(row_q, row_mu).real();
      },
      0.0, kInfinity, options);

  return SpectrumComponents::make(omega, side, q.value, mu.value, cross.value, false);
}

}  // namespace casimir

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
#include "casimir/asymmetry.hpp"

#include <cmath>
#include <numbers>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

using std::numbers::pi;

// eps^2/pi * lambda0 (1 + lambda0^2) Upsilon(w) Upsilon(w0 - w), the shape
// shared by the motion and coupling differences.
double asymmetric_core(double omega, const MonoConfig& cfg) {
  const auto partner = mono_pair_weight(omega, cfg.omega0);
  if (!partner) return 0.0;
  const MirrorParams& p = cfg.params;
  return cfg.eps * cfg.eps / pi * p.lambda0() * p.stiffness() * upsilon(omega, p) *
         upsilon(*partner, p);
}

}  // namespace

double delta_n_q(double omega, const MonoConfig& cfg) {
  const double mu = cfg.params.mu0();
  return cfg.omega0 * cfg.omega0 * mu * mu * asymmetric_core(omega, cfg);
}

double delta_n_mu(double omega, const MonoConfig& cfg) {
  const double mu = cfg.params.mu0();
  return -mu * mu * asymmetric_core(omega, cfg);
}

double delta_n_int(double omega, const MonoConfig& cfg) {
  const auto partner = mono_pair_weight(omega, cfg.omega0);
  if (!partner) return 0.0;
  const MirrorParams& p = cfg.params;
  const double mu = p.mu0();
  const double lambda = p.lambda0();
  const double bracket = mu * mu - 4.0 * lambda * lambda * omega * *partner;
  return -cfg.eps * cfg.eps / pi * mu * p.stiffness() * bracket * upsilon(omega, p) *
         upsilon(*partner, p) * std::cos(cfg.phi);
}

double resonance_check(double omega, const MonoConfig& cfg) {
  return delta_n_q(omega, cfg) + cfg.omega0 * cfg.omega0 * delta_n_mu(omega, cfg);
}

double interference_factor(double omega, const MonoConfig& cfg) {
  const double lambda = cfg.params.lambda0();
  if (lambda == 0.0) {
    throw DomainError("interference_factor: undefined for lambda0 == 0");
  }
  const double mu = cfg.params.mu0();
  return (mu * mu - 4.0 * lambda * lambda * omega * (cfg.omega0 - omega)) /
         (2.0 * lambda * mu * cfg.omega0);
}

DifferenceComponents delta_n_total(double omega, const MonoConfig& cfg) {
  DifferenceComponents d;
  d.omega = omega;
  d.d_q = delta_n_q(omega, cfg);
  d.d_mu = delta_n_mu(omega, cfg);
  d.d_int = delta_n_int(omega, cfg);
  d.d_total = d.d_q + d.d_mu + d.d_int;
  if (cfg.params.lambda0() != 0.0) {
    const double w0 = cfg.omega0;
    d.product_form =
        (1.0 + 2.0 * w0 * interference_factor(omega, cfg) * std::cos(cfg.phi) - w0 * w0) * d.d_mu;
  }
  return d;
}

std::optional<std::pair<double, double>> diff_roots(const MonoConfig& cfg) {
  const double mu = cfg.params.mu0();
  const double lambda = std::abs(cfg.params.lambda0());
  const double w0 = cfg.omega0;
  if (!(lambda * w0 > mu)) return std::nullopt;
  const double half_width = 0.5 * std::sqrt(w0 * w0 - mu * mu / (lambda * lambda));
  return std::pair{0.5 * w0 - half_width, 0.5 * w0 + half_width};
}

double low_freq_approx(double omega, const MonoConfig& cfg) {
  const MirrorParams& p = cfg.params;
  const double mu_sq = p.mu0() * p.mu0();
  const double k = p.stiffness();
  const double base = mu_sq + omega * omega * k * k;
  return p.lambda0() * k * mu_sq * omega * omega / (pi * base * base);
}

double high_freq_approx(double omega, const MonoConfig& cfg) {
  const MirrorParams& p = cfg.params;
  const double mu_sq = p.mu0() * p.mu0();
  const double k = p.stiffness();
  const double base = mu_sq + omega * omega * k * k;
  return p.lambda0() * mu_sq * omega * (cfg.omega0 + omega) / (pi * k * base);
}

}  // namespace casimir

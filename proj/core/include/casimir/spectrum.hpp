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
#ifndef CASIMIR_SPECTRUM_HPP_
#define CASIMIR_SPECTRUM_HPP_

#include <optional>
#include <utility>

#include "casimir/drives.hpp"
#include "casimir/scattering.hpp"

namespace casimir {

/// A mirror that both oscillates in place and has a fluctuating coupling,
/// with the two drives locked to one frequency omega0. phi is the phase of
/// the motion relative to the coupling fluctuation; eps is the common
/// amplitude and tau the effective oscillation time.
struct MonoConfig {
  MirrorParams params{1.0, 0.0};
  double omega0 = 1.0;
  double phi = 0.0;
  double eps = 1.0;
  double tau = 1.0;

  /// Throws DomainError unless omega0 > 0, tau > 0 and eps >= 0.
  static MonoConfig make(const MirrorParams& params, double omega0, double phi, double eps,
                         double tau);
};

/// Per-side spectral density split by source. Monochromatic results are
/// densities per unit tau (per_tau == true); general-path results are raw
/// densities (per_tau == false). n_total is always n_q + n_mu + n_int.
struct SpectrumComponents {
  double omega = 0.0;
  Side side = Side::Right;
  double n_q = 0.0;
  double n_mu = 0.0;
  double n_int = 0.0;
  double n_total = 0.0;
  bool per_tau = true;

  static SpectrumComponents make(double omega, Side side, double n_q, double n_mu, double n_int,
                                 bool per_tau);

  /// Converts raw densities to per-unit-tau densities. No-op if already per tau.
  SpectrumComponents scaled_per_tau(double tau) const;
};

/// Upsilon(w) = w / [mu0^2 + w^2 (1 + lambda0^2)^2]; peaks at w = mu0 / (1 + lambda0^2).
double upsilon(double omega, const MirrorParams& p);

// Monochromatic closed forms, each a density per unit tau that vanishes
// outside 0 < omega < omega0 and is symmetric under omega -> omega0 - omega.

/// Motion-only density:
///   (eps^2/4pi) w (w0-w) Re[(i mu0 (1 -+ lambda0)^2 w0 + 8 lambda0^2 w (w0-w) - 2 mu0^2)
///                           / ((i mu0 + w k)(i mu0 + (w0-w) k))],  k = 1 + lambda0^2.
/// The upper sign belongs to Side::Right.
double n_q_mono(double omega, Side side, const MonoConfig& cfg);

/// Coupling-only density:
///   (eps^2 mu0^2 / 4pi) (1 +- lambda0)^2 (1 + lambda0^2) Upsilon(w) Upsilon(w0-w).
double n_mu_mono(double omega, Side side, const MonoConfig& cfg);

/// Interference density:
///   (eps^2 mu0 / 2pi) (1 +- lambda0)^2 [+-mu0^2 - 2 lambda0 (1 + lambda0^2) w (w0-w)]
///   Upsilon(w) Upsilon(w0-w) cos(phi).
double n_int_mono(double omega, Side side, const MonoConfig& cfg);

/// Zeros of the right-side interference density,
///   2 w_pm = w0 +- sqrt(w0^2 - 2 mu0^2 / (lambda0 (1 + lambda0^2))).
/// nullopt when lambda0 <= 0 or lambda0 (1 + lambda0^2) w0^2 <= 2 mu0^2,
/// in which case the right-side interference keeps one sign.
std::optional<std::pair<double, double>> interference_roots(const MonoConfig& cfg);

/// The three monochromatic densities on one side and their sum.
SpectrumComponents spectrum_components(double omega, Side side, const MonoConfig& cfg);

/// General (finite tau) spectrum from the trace formula
///
///   N(w) = (1/2pi) int_0^inf (dw'/2pi) (w/w') Tr[dS(w,-w') dS^dagger(w,-w')],
///   dS = dS_mu[F = fourier(drive_f)] + dS_q[G = fourier(drive_g)].
///
/// drive_f modulates the coupling, drive_g moves the mirror; their eps
/// fields are the respective amplitudes and their tau must agree. The
/// side selects the outgoing row of dS. n_q and n_mu come from the squared
/// norms of the row of dS_q and dS_mu, n_int from 2 Re <row_q, row_mu>.
///
/// The result is raw (not divided by tau). Throws QuadratureError if an
/// integral does not reach tol, DomainError if the tau values differ.
SpectrumComponents n_general(double omega, Side side, const DampedCosineDrive& drive_f,
                             const DampedCosineDrive& drive_g, const MirrorParams& p,
                             double tol = 1e-6);

}  // namespace casimir

#endif  // CASIMIR_SPECTRUM_HPP_

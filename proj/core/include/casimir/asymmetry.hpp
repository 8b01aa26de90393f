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
#ifndef CASIMIR_ASYMMETRY_HPP_
#define CASIMIR_ASYMMETRY_HPP_

#include <optional>
#include <utility>

#include "casimir/spectrum.hpp"

namespace casimir {

/// Left-minus-right spectral difference Delta N = N_- - N_+ per unit tau,
/// split by source. A negative value means the right half produces more.
struct DifferenceComponents {
  double omega = 0.0;
  double d_q = 0.0;
  double d_mu = 0.0;
  double d_int = 0.0;
  double d_total = 0.0;
  /// [1 + 2 w0 I(w) cos(phi) - w0^2] d_mu; only defined for lambda0 != 0.
  std::optional<double> product_form;
};

/// (eps^2/pi) w0^2 mu0^2 lambda0 (1 + lambda0^2) Upsilon(w) Upsilon(w0 - w)
double delta_n_q(double omega, const MonoConfig& cfg);

/// -(eps^2/pi) mu0^2 lambda0 (1 + lambda0^2) Upsilon(w) Upsilon(w0 - w)
double delta_n_mu(double omega, const MonoConfig& cfg);

/// -(eps^2/pi) mu0 (1 + lambda0^2) [mu0^2 - 4 lambda0^2 w (w0 - w)] Upsilon(w) Upsilon(w0 - w) cos(phi)
double delta_n_int(double omega, const MonoConfig& cfg);

/// Residual of the resonance identity Delta N_q = -w0^2 Delta N_mu,
/// i.e. Delta N_q + w0^2 Delta N_mu.
double resonance_check(double omega, const MonoConfig& cfg);

/// I(w) = [mu0^2 - 4 lambda0^2 w (w0 - w)] / (2 lambda0 mu0 w0).
/// Throws DomainError when lambda0 == 0.
double interference_factor(double omega, const MonoConfig& cfg);

/// All three differences and their sum. For lambda0 != 0 the product form
/// is filled in as an independent route to the same total.
DifferenceComponents delta_n_total(double omega, const MonoConfig& cfg);

/// Zeros of Delta N_int, 2 w_pm = w0 +- sqrt(w0^2 - mu0^2 / lambda0^2).
/// nullopt unless |lambda0| w0 > mu0.
std::optional<std::pair<double, double>> diff_roots(const MonoConfig& cfg);

/// Dominant-term shapes for slow (w0 << 1) and fast (w0 >> 1) driving:
///   low:  lambda0 (1 + lambda0^2) mu0^2 w^2 / (pi [mu0^2 + w^2 (1 + lambda0^2)^2]^2)
///   high: lambda0 mu0^2 w (w0 + w) / (pi (1 + lambda0^2) [mu0^2 + w^2 (1 + lambda0^2)^2])
/// These are qualitative curves: no eps^2 tau factor, no cutoff, and the
/// second Upsilon factor already approximated away. Use delta_n_mu and
/// delta_n_q for quantitative work.
double low_freq_approx(double omega, const MonoConfig& cfg);
double high_freq_approx(double omega, const MonoConfig& cfg);

}  // namespace casimir

#endif  // CASIMIR_ASYMMETRY_HPP_

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
#ifndef CASIMIR_RATES_HPP_
#define CASIMIR_RATES_HPP_

#include <functional>
#include <string_view>

#include "casimir/spectrum.hpp"

namespace casimir {

// Total created-particle numbers for the locked-frequency mirror. The
// creation rate is the number divided by tau.
//
// The closed forms
//   N_mu  = (eps^2 tau w0 / pi) G(xi)
//   N_int = (2 eps^2 tau lambda0 w0^3 cos(phi) / (mu0 pi)) I(xi)
// equal the integral of the side-summed density against dw. Integrating
// against dw/2pi instead gives the same numbers divided by 2 pi; select
// that with SpectralMeasure::kCyclic.
//
// A moving delta/delta-prime mirror with lambda0 = 1 maps onto a Robin
// mirror with gamma0 = 2/mu0: N_mu = w0^2 N_gamma, and the interference
// numbers agree up to a factor -2 w0. The Robin rates themselves are not
// implemented here.

enum class SpectralMeasure {
  kAngular,  ///< int_0^inf dw N(w)
  kCyclic,   ///< int_0^inf dw/(2 pi) N(w)
};

enum class RateMethod { kClosedForm, kQuadrature };

std::string_view to_string(RateMethod method);

struct RateBreakdown {
  double n_q = 0.0;
  double n_mu = 0.0;
  double n_int = 0.0;
  double n_total = 0.0;
  double xi = 0.0;
  RateMethod method_q = RateMethod::kQuadrature;
  RateMethod method_mu = RateMethod::kClosedForm;
  RateMethod method_int = RateMethod::kClosedForm;
};

/// Closed form for the motion-only number as a function of xi, in units of
/// eps^2 tau w0^3 / pi. Not shipped; plug one in through RateOptions to have
/// rate_breakdown use it instead of quadrature.
using MotionRateClosedForm = std::function<double(double xi, const MonoConfig& cfg)>;

struct RateOptions {
  double rel_tol = 1e-9;
  SpectralMeasure measure = SpectralMeasure::kAngular;
  MotionRateClosedForm motion_closed_form;
};

/// xi = (1 + lambda0^2) w0 / mu0
double xi_of(const MonoConfig& cfg);

/// G(xi) = [(xi^2 + 2) ln(1 + xi^2) - 2 xi arctan(xi)] / (2 xi^2 (xi^2 + 4)).
/// Positive for xi > 0, ~ xi^2/12 near 0. Throws DomainError for xi <= 0.
double g_of_xi(double xi);

/// I(xi) = [xi (ln(1 + xi^2) - 4 - xi^2) + 2 (2 + xi^2) arctan(xi)] / (xi^3 (xi^2 + 4)).
/// Tends to 1/6 as xi -> 0 and changes sign once, near xi = 2.23.
/// Throws DomainError for xi <= 0.
double i_of_xi(double xi);

/// N_q by quadrature of the motion density summed over both sides; N_mu and
/// N_int from the closed forms.
RateBreakdown rate_breakdown(const MonoConfig& cfg, const RateOptions& options = {});

/// The xi at which the interference number vanishes. I depends on xi alone,
/// so the mirror constants do not move it.
double interference_null(const MirrorParams& p);

}  // namespace casimir

#endif  // CASIMIR_RATES_HPP_

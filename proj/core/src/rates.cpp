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
#include "casimir/rates.hpp"

#include <cmath>
#include <numbers>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {
namespace {

using std::numbers::pi;

// Below this xi both closed forms lose digits to cancellation; their
// numerators are evaluated from the Taylor series instead.
constexpr double kSeriesBelow = 0.1;

double measure_factor(SpectralMeasure measure) {
  return measure == SpectralMeasure::kCyclic ? 1.0 / (2.0 * pi) : 1.0;
}

void require_positive_xi(double xi) {
  if (!std::isfinite(xi) || !(xi > 0.0)) throw DomainError("xi must be positive and finite");
}

}  // namespace

std::string_view to_string(RateMethod method) {
  return method == RateMethod::kClosedForm ? "closed_form" : "quadrature";
}

double xi_of(const MonoConfig& cfg) {
  return cfg.params.stiffness() * cfg.omega0 / cfg.params.mu0();
}

double g_of_xi(double xi) {
  require_positive_xi(xi);
  const double u = xi * xi;
  if (xi < kSeriesBelow) {
    // numerator / u^2 = 2/3 - 7u/30 + 5u^2/42 - 13u^3/180 + 8u^4/165 - 19u^5/546
    const double reduced =
        2.0 / 3 + u * (-7.0 / 30 + u * (5.0 / 42 + u * (-13.0 / 180 + u * (8.0 / 165 - u * 19.0 / 546))));
    return u * reduced / (2.0 * (u + 4.0));
  }
  const double numerator = (u + 2.0) * std::log1p(u) - 2.0 * xi * std::atan(xi);
  return numerator / (2.0 * u * (u + 4.0));
}

double i_of_xi(double xi) {
  require_positive_xi(xi);
  const double u = xi * xi;
  if (xi < kSeriesBelow) {
    // numerator / xi^3 = 2/3 - 11u/30 + 17u^2/105 - 23u^3/252 + 29u^4/495 - 35u^5/858
    const double reduced =
        2.0 / 3 + u * (-11.0 / 30 + u * (17.0 / 105 + u * (-23.0 / 252 + u * (29.0 / 495 - u * 35.0 / 858))));
    return reduced / (u + 4.0);
  }
  const double numerator =
      xi * (std::log1p(u) - 4.0 - u) + 2.0 * (2.0 + u) * std::atan(xi);
  return numerator / (xi * u * (u + 4.0));
}

RateBreakdown rate_breakdown(const MonoConfig& cfg, const RateOptions& options) {
  if (!(options.rel_tol > 0.0)) throw DomainError("rate_breakdown: rel_tol must be > 0");
  const double scale = measure_factor(options.measure);
  const double w0 = cfg.omega0;
  const double mu = cfg.params.mu0();
  const double lambda = cfg.params.lambda0();
  const double strength = cfg.eps * cfg.eps * cfg.tau;

  RateBreakdown r;
  r.xi = xi_of(cfg);

  if (options.motion_closed_form) {
    r.n_q = scale * strength * w0 * w0 * w0 / pi * options.motion_closed_form(r.xi, cfg);
    r.method_q = RateMethod::kClosedForm;
  } else {
    IntegrationOptions quad;
    quad.rel_tol = options.rel_tol;
    quad.hints = {0.5 * w0};
    const auto motion = integrate(
        [&](double w) {
          return n_q_mono(w, Side::Right, cfg) + n_q_mono(w, Side::Left, cfg);
        },
        0.0, w0, quad);
    r.n_q = scale * cfg.tau * motion.value;
    r.method_q = RateMethod::kQuadrature;
  }

  r.n_mu = scale * strength * w0 / pi * g_of_xi(r.xi);
  r.method_mu = RateMethod::kClosedForm;
  r.n_int = scale * 2.0 * strength * lambda * w0 * w0 * w0 * std::cos(cfg.phi) / (mu * pi) *
            i_of_xi(r.xi);
  r.method_int = RateMethod::kClosedForm;

  r.n_total = r.n_q + r.n_mu + r.n_int;
  return r;
}

double interference_null(const MirrorParams& /*p*/) {
  return find_root(i_of_xi, 1.0, 3.0, 1e-13);
}

}  // namespace casimir

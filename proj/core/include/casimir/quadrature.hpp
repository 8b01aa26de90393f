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
#ifndef CASIMIR_QUADRATURE_HPP_
#define CASIMIR_QUADRATURE_HPP_

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

/// Upper limit sentinel for semi-infinite integrals.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct IntegrationOptions {
  /// Relative tolerance on the total.
  double rel_tol = 1e-9;
  /// Absolute floor: convergence is declared once error <= max(rel_tol*|value|, abs_tol).
  double abs_tol = 0.0;
  /// Points where the integrand is known to vary sharply (narrow peaks,
  /// kinks). The range is pre-split there so no peak hides inside a panel.
  std::vector<double> hints;
  /// Subdivision budget across all panels.
  std::size_t max_panels = 5000;
};

/// Raised when the budget runs out before the tolerance is met, or when the
/// integrand returns a non-finite value. Carries the best estimate so far.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, IntegrationResult best)
      : Error(what), best_(best) {}
  const IntegrationResult& best_estimate() const { return best_; }

 private:
  IntegrationResult best_;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod quadrature of f over [a, b].
///
/// b may be kInfinity; the tail beyond the last finite breakpoint is mapped
/// with x = c + t / (1 - t), t in [0, 1). Requires a < b and rel_tol > 0.
IntegrationResult integrate(const Integrand& f, double a, double b,
                            const IntegrationOptions& options);

IntegrationResult integrate(const Integrand& f, double a, double b, double rel_tol = 1e-9);

/// Bracketed root of f on [lo, hi] (TOMS 748). Returns a point whose
/// enclosing bracket is no wider than tol. Throws RootBracketError when
/// f(lo) and f(hi) share a strict sign.
double find_root(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12);

}  // namespace casimir

#endif  // CASIMIR_QUADRATURE_HPP_

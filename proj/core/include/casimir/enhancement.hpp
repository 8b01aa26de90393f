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
#ifndef CASIMIR_ENHANCEMENT_HPP_
#define CASIMIR_ENHANCEMENT_HPP_

#include <span>
#include <vector>

#include "casimir/scattering.hpp"

namespace casimir {

/// One coupling-fluctuation source eps * cos(omega t + phi) exp(-|t|/tau).
struct Source {
  double eps = 1.0;
  double omega = 1.0;
  double phi = 0.0;
};

/// Sources acting on a mirror held at rest, sharing one decay time:
/// mu(t) = mu0 [1 + sum_i eps_i f_i(t)]. The first phase is 0 by convention.
class SourceSet {
 public:
  /// Throws DomainError when empty, when some eps < 0 or omega <= 0, or when tau <= 0.
  SourceSet(std::vector<Source> sources, double tau);

  std::span<const Source> sources() const { return sources_; }
  std::size_t size() const { return sources_.size(); }
  double tau() const { return tau_; }

  /// True when every source has the same frequency (relative 1e-12).
  bool resonant() const;

 private:
  std::vector<Source> sources_;
  double tau_;
};

/// eps1^2 + eps2^2 + 2 eps1 eps2 cos(phi)
double effective_eps_sq_two(double eps1, double eps2, double phi);

/// sum_i eps_i^2 + sum_{i != j} eps_i eps_j cos(phi_j - phi_i), which is
/// |sum_i eps_i e^{i phi_i}|^2. Throws DomainError unless the set is resonant.
double effective_eps_sq_n(const SourceSet& s);

/// Resonant left-minus-right coupling difference, including tau:
///   -(eps(phi)^2 tau / pi) mu0^2 lambda0 (1 + lambda0^2) Upsilon(w) Upsilon(w0 - w).
/// Every source must oscillate at omega0 (DomainError otherwise).
double enhanced_delta_n_mu(double omega, const SourceSet& s, const MirrorParams& p, double omega0);

/// The same quantity assembled from single-source differences plus pairwise
/// cross terms 2 sgn sqrt|dN_i dN_j| cos(phi_j - phi_i), where sgn is the
/// common sign of the single-source differences.
double enhanced_delta_n_mu_cross_terms(double omega, const SourceSet& s, const MirrorParams& p,
                                       double omega0);

/// Coupling spectrum on one side, including tau, for arbitrary frequencies.
/// Sources are grouped into equal-frequency clusters; each cluster
/// contributes one resonant term with its eps(phi)^2 and cutoff at the
/// cluster frequency, and clusters add without interference.
double off_resonance_spectrum(double omega, Side side, const SourceSet& s, const MirrorParams& p);

/// Left-minus-right counterpart of off_resonance_spectrum.
double off_resonance_delta_n_mu(double omega, const SourceSet& s, const MirrorParams& p);

}  // namespace casimir

#endif  // CASIMIR_ENHANCEMENT_HPP_

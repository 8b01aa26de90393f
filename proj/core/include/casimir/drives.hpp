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
#ifndef CASIMIR_DRIVES_HPP_
#define CASIMIR_DRIVES_HPP_

#include <optional>
#include <span>
#include <vector>

#include "casimir/scattering.hpp"

namespace casimir {

/// eps * cos(freq * t + phase) * exp(-|t| / tau).
///
/// The amplitude eps is carried alongside the shape but is not part of
/// profile() or fourier(); it enters the first-order S-matrices as a
/// separate factor.
struct DampedCosineDrive {
  double eps = 0.0;
  double freq = 1.0;
  double phase = 0.0;
  double tau = 1.0;

  /// Throws DomainError unless eps >= 0, freq > 0 and tau > 0 (all finite).
  static DampedCosineDrive make(double eps, double freq, double phase, double tau);
};

/// cos(freq * t + phase) * exp(-|t| / tau). Bounded by 1 in magnitude.
double profile(const DampedCosineDrive& d, double t);

/// Unnormalized transform F(w) = int dt profile(t) e^{i w t}.
///
/// With a = 1/tau this is
///   F(w) = e^{-i phase} a / (a^2 + (w - freq)^2) + e^{+i phase} a / (a^2 + (w + freq)^2),
/// so each Lorentzian carries int |.|^2 dw = pi tau / 2, which is the
/// normalization required for |F|^2 / tau -> (pi/2)[delta(w - freq) + delta(w + freq)].
Complex fourier(const DampedCosineDrive& d, double omega);

/// In the monochromatic limit the pair delta selects w' = omega0 - omega on
/// the positive-frequency range. Returns that w', or nullopt when
/// omega <= 0 or omega >= omega0 (the step function vanishes, Theta(0) = 0).
std::optional<double> mono_pair_weight(double omega, double omega0);

/// Sum of damped cosines with a shared decay time,
/// mu(t) = mu0 [1 + sum_i eps_i f_i(t)]. The first source conventionally has
/// phase 0.
class MultiSourceDrive {
 public:
  /// Throws DomainError if sources is empty or the tau values differ.
  explicit MultiSourceDrive(std::vector<DampedCosineDrive> sources);

  std::span<const DampedCosineDrive> sources() const { return sources_; }
  double tau() const { return sources_.front().tau; }

  /// sum_i eps_i * profile_i(t)
  double profile(double t) const;
  /// sum_i eps_i * F_i(omega)
  Complex fourier(double omega) const;

 private:
  std::vector<DampedCosineDrive> sources_;
};

}  // namespace casimir

#endif  // CASIMIR_DRIVES_HPP_

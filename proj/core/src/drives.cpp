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
#include "casimir/drives.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/errors.hpp"

namespace casimir {

DampedCosineDrive DampedCosineDrive::make(double eps, double freq, double phase, double tau) {
  if (!std::isfinite(eps) || eps < 0.0) throw DomainError("drive amplitude eps must be >= 0");
  if (!std::isfinite(freq) || !(freq > 0.0)) throw DomainError("drive frequency must be > 0");
  if (!std::isfinite(phase)) throw DomainError("drive phase must be finite");
  if (!std::isfinite(tau) || !(tau > 0.0)) throw DomainError("drive time tau must be > 0");
  return {eps, freq, phase, tau};
}

double profile(const DampedCosineDrive& d, double t) {
  return std::cos(d.freq * t + d.phase) * std::exp(-std::abs(t) / d.tau);
}

Complex fourier(const DampedCosineDrive& d, double omega) {
  const double a = 1.0 / d.tau;
  const double below = omega - d.freq;
  const double above = omega + d.freq;
  const double near = a / (a * a + below * below);
  const double far = a / (a * a + above * above);
  return std::polar(near, -d.phase) + std::polar(far, d.phase);
}

std::optional<double> mono_pair_weight(double omega, double omega0) {
  if (!(omega > 0.0) || !(omega < omega0)) return std::nullopt;
  return omega0 - omega;
}

MultiSourceDrive::MultiSourceDrive(std::vector<DampedCosineDrive> sources)
    : sources_(std::move(sources)) {
  if (sources_.empty()) throw DomainError("multi-source drive needs at least one source");
  const double tau = sources_.front().tau;
  const bool shared = std::all_of(sources_.begin(), sources_.end(),
                                  [tau](const DampedCosineDrive& d) { return d.tau == tau; });
  if (!shared) throw DomainError("all sources of a multi-source drive must share tau");
}

double MultiSourceDrive::profile(double t) const {
  double sum = 0.0;
  for (const auto& d : sources_) sum += d.eps * casimir::profile(d, t);
  return sum;
}

Complex MultiSourceDrive::fourier(double omega) const {
  Complex sum{};
  for (const auto& d : sources_) sum += d.eps * casimir::fourier(d, omega);
  return sum;
}

}  // namespace casimir

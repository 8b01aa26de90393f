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
#include "casimir/enhancement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "casimir/drives.hpp"
#include "casimir/errors.hpp"
#include "casimir/spectrum.hpp"

namespace casimir {
namespace {

using std::numbers::pi;

constexpr double kSameFrequency = 1e-12;

bool same_frequency(double a, double b) {
  return std::abs(a - b) <= kSameFrequency * std::max(std::abs(a), std::abs(b));
}

struct Cluster {
  double omega;
  double eps_sq;
};

double gram_eps_sq(std::span<const Source> sources) {
  double sum = 0.0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    sum += sources[i].eps * sources[i].eps;
    for (std::size_t j = 0; j < sources.size(); ++j) {
      if (i == j) continue;
      sum += sources[i].eps * sources[j].eps * std::cos(sources[j].phi - sources[i].phi);
    }
  }
  return std::max(sum, 0.0);
}

// Equal-frequency groups in order of first appearance.
std::vector<Cluster> clusters_of(const SourceSet& s) {
  std::vector<std::vector<Source>> groups;
  for (const Source& src : s.sources()) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const std::vector<Source>& g) {
      return same_frequency(g.front().omega, src.omega);
    });
    if (it == groups.end()) {
      groups.push_back({src});
    } else {
      it->push_back(src);
    }
  }
  std::vector<Cluster> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back({g.front().omega, gram_eps_sq(g)});
  return out;
}

// -(tau/pi) mu0^2 lambda0 (1 + lambda0^2) Upsilon(w) Upsilon(w0 - w), per unit eps^2.
double unit_difference(double omega, double omega0, double tau, const MirrorParams& p) {
  const auto partner = mono_pair_weight(omega, omega0);
  if (!partner) return 0.0;
  const double mu = p.mu0();
  return -tau / pi * mu * mu * p.lambda0() * p.stiffness() * upsilon(omega, p) *
         upsilon(*partner, p);
}

// (tau/4pi) mu0^2 (1 +- lambda0)^2 (1 + lambda0^2) Upsilon(w) Upsilon(w0 - w), per unit eps^2.
double unit_spectrum(double omega, Side side, double omega0, double tau, const MirrorParams& p) {
  const auto partner = mono_pair_weight(omega, omega0);
  if (!partner) return 0.0;
  const double mu = p.mu0();
  const double tilt = 1.0 + sign_of(side) * p.lambda0();
  return tau / (4.0 * pi) * mu * mu * tilt * tilt * p.stiffness() * upsilon(omega, p) *
         upsilon(*partner, p);
}

void require_locked_to(const SourceSet& s, double omega0) {
  for (const Source& src : s.sources()) {
    if (!same_frequency(src.omega, omega0)) {
      throw DomainError(
          "sources are not all at omega0; use off_resonance_spectrum for mixed frequencies");
    }
  }
}

}  // namespace

SourceSet::SourceSet(std::vector<Source> sources, double tau)
    : sources_(std::move(sources)), tau_(tau) {
  if (sources_.empty()) throw DomainError("source set must not be empty");
  if (!std::isfinite(tau) || !(tau > 0.0)) throw DomainError("source set tau must be > 0");
  for (const Source& src : sources_) {
    if (!std::isfinite(src.eps) || src.eps < 0.0) throw DomainError("source eps must be >= 0");
    if (!std::isfinite(src.omega) || !(src.omega > 0.0)) {
      throw DomainError("source frequency must be > 0");
    }
    if (!std::isfinite(src.phi)) throw DomainError("source phase must be finite");
  }
}

bool SourceSet::resonant() const {
  const double first = sources_.front().omega;
  return std::all_of(sources_.begin(), sources_.end(),
                     [first](const Source& s) { return same_frequency(s.omega, first); });
}

double effective_eps_sq_two(double eps1, double eps2, double phi) {
  return eps1 * eps1 + eps2 * eps2 + 2.0 * eps1 * eps2 * std::cos(phi);
}

double effective_eps_sq_n(const SourceSet& s) {
  if (!s.resonant()) {
    throw DomainError(
        "effective_eps_sq_n needs equal frequencies; use off_resonance_spectrum instead");
  }
  return gram_eps_sq(s.sources());
}

double enhanced_delta_n_mu(double omega, const SourceSet& s, const MirrorParams& p,
                           double omega0) {
  require_locked_to(s, omega0);
  return effective_eps_sq_n(s) * unit_difference(omega, omega0, s.tau(), p);
}

double enhanced_delta_n_mu_cross_terms(double omega, const SourceSet& s, const MirrorParams& p,
                                       double omega0) {
  require_locked_to(s, omega0);
  const double unit = unit_difference(omega, omega0, s.tau(), p);
  const double sign = unit < 0.0 ? -1.0 : 1.0;
  const auto sources = s.sources();

  double total = 0.0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const double di = sources[i].eps * sources[i].eps * unit;
    total += di;
    for (std::size_t j = i + 1; j < sources.size(); ++j) {
      const double dj = sources[j].eps * sources[j].eps * unit;
      total += 2.0 * sign * std::sqrt(std::abs(di * dj)) *
               std::cos(sources[j].phi - sources[i].phi);
    }
  }
  return total;
}

double off_resonance_spectrum(double omega, Side side, const SourceSet& s,
                              const MirrorParams& p) {
  double total = 0.0;
  for (const Cluster& c : clusters_of(s)) {
    total += c.eps_sq * unit_spectrum(omega, side, c.omega, s.tau(), p);
  }
  return total;
}

double off_resonance_delta_n_mu(double omega, const SourceSet& s, const MirrorParams& p) {
  double total = 0.0;
  for (const Cluster& c : clusters_of(s)) {
    total += c.eps_sq * unit_difference(omega, c.omega, s.tau(), p);
  }
  return total;
}

}  // namespace casimir

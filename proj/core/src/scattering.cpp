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
#include "casimir/scattering.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

constexpr Complex kI{0.0, 1.0};

Complex denominator(double omega, const MirrorParams& p) {
  const Complex d{omega * p.stiffness(), p.mu0()};
  if (d == Complex{}) {
    throw DegenerateScattering("scattering denominator i*mu0 + omega*(1 + lambda0^2) is zero");
  }
  return d;
}

}  // namespace

std::string_view to_string(Side side) { return side == Side::Right ? "right" : "left"; }

MirrorParams::MirrorParams(double mu0, double lambda0) : mu0_(mu0), lambda0_(lambda0) {
  if (!std::isfinite(mu0) || !(mu0 > 0.0)) {
    throw DomainError("mirror coupling mu0 must be positive and finite");
  }
  if (!std::isfinite(lambda0)) {
    throw DomainError("mirror asymmetry lambda0 must be finite");
  }
}

Complex ScatterMatrix::determinant() const {
  return rows_[0][0] * rows_[1][1] - rows_[0][1] * rows_[1][0];
}

ScatterMatrix& ScatterMatrix::operator+=(const ScatterMatrix& other) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) rows_[i][j] += other.rows_[i][j];
  return *this;
}

ScatterMatrix& ScatterMatrix::operator-=(const ScatterMatrix& other) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) rows_[i][j] -= other.rows_[i][j];
  return *this;
}

ScatterMatrix& ScatterMatrix::operator*=(Complex scale) {
  for (auto& row : rows_)
    for (auto& x : row) x *= scale;
  return *this;
}

ScatterMatrix operator*(const ScatterMatrix& a, const ScatterMatrix& b) {
  ScatterMatrix out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return out;
}

double norm_sq(const ScatterMatrix::Row& row) { return std::norm(row[0]) + std::norm(row[1]); }

Complex inner(const ScatterMatrix::Row& a, const ScatterMatrix::Row& b) {
  return a[0] * std::conj(b[0]) + a[1] * std::conj(b[1]);
}

Complex reflection(double omega, Side side, const MirrorParams& p) {
  const Complex numerator{sign_of(side) * 2.0 * omega * p.lambda0(), -p.mu0()};
  return numerator / denominator(omega, p);
}

Complex transmission(double omega, const MirrorParams& p) {
  const double lambda_sq = p.lambda0() * p.lambda0();
  return omega * (1.0 - lambda_sq) / denominator(omega, p);
}

ScatterMatrix s0_matrix(double omega, const MirrorParams& p) {
  if (omega == 0.0) return {0.0, -1.0, -1.0, 0.0};
  const Complex s = transmission(omega, p);
  return {s, reflection(omega, Side::Right, p), reflection(omega, Side::Left, p), s};
}

ScatterMatrix delta_s_q(double omega, double omega_prime, Complex g_hat, double eps,
                        const MirrorParams& p) {
  const ScatterMatrix eta = ScatterMatrix::eta();
  ScatterMatrix bracket = s0_matrix(omega, p) * eta - eta * s0_matrix(omega_prime, p);
  return bracket * (kI * eps * omega_prime * g_hat);
}

ScatterMatrix delta_s_mu(double omega, double omega_prime, Complex f_hat, double eps,
                         const MirrorParams& p) {
  const Complex alpha = -kI * p.mu0() * f_hat / denominator(omega, p);
  ScatterMatrix coupling = ScatterMatrix::exchange() + s0_matrix(omega_prime, p);
  return coupling * (eps * alpha);
}

}  // namespace casimir

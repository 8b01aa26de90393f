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
#ifndef CASIMIR_SCATTERING_HPP_
#define CASIMIR_SCATTERING_HPP_

#include <array>
#include <complex>
#include <string_view>

namespace casimir {

using Complex = std::complex<double>;

/// Which half-line a quantity refers to. Right is the x > 0 region (the
/// upper sign in the +/- formulas), Left is x < 0 (the lower sign).
enum class Side { Left, Right };

/// +1 for Right, -1 for Left.
constexpr double sign_of(Side side) { return side == Side::Right ? 1.0 : -1.0; }

std::string_view to_string(Side side);

/// Static constants of the delta/delta-prime point mirror
/// U(x) = mu0*delta(x) + lambda0*delta'(x), in units with c = hbar = 1.
///
/// mu0 plays the role of a plasma frequency and must be positive and finite.
/// lambda0 is the dimensionless asymmetry factor: lambda0 == 0 is the
/// symmetric delta mirror and |lambda0| == 1 blocks transmission entirely.
class MirrorParams {
 public:
  /// Throws DomainError unless mu0 > 0 and both values are finite.
  MirrorParams(double mu0, double lambda0);

  double mu0() const { return mu0_; }
  double lambda0() const { return lambda0_; }

  /// 1 + lambda0^2, the combination that multiplies omega in every
  /// scattering denominator.
  double stiffness() const { return 1.0 + lambda0_ * lambda0_; }

  /// The fluctuating-coupling results are derived assuming mu0 >= 1.
  /// Smaller values are accepted; callers that report results should warn.
  bool below_unit_coupling() const { return mu0_ < 1.0; }

  friend bool operator==(const MirrorParams&, const MirrorParams&) = default;

 private:
  double mu0_;
  double lambda0_;
};

/// 2x2 complex matrix. Rows are the outgoing channels (right-moving out on
/// x > 0, left-moving out on x < 0); columns are the incoming channels
/// (from the left, from the right). The zeroth-order matrix reads
///
///     ( s+  r+ )
///     ( r-  s- )
class ScatterMatrix {
 public:
  using Row = std::array<Complex, 2>;

  constexpr ScatterMatrix() = default;
  constexpr ScatterMatrix(Complex a00, Complex a01, Complex a10, Complex a11)
      : rows_{Row{a00, a01}, Row{a10, a11}} {}

  static constexpr ScatterMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }
  /// diag(1, -1)
  static constexpr ScatterMatrix eta() { return {1.0, 0.0, 0.0, -1.0}; }
  /// Column-reversed identity.
  static constexpr ScatterMatrix exchange() { return {0.0, 1.0, 1.0, 0.0}; }

  Complex operator()(int row, int col) const { return rows_[row][col]; }
  Complex& operator()(int row, int col) { return rows_[row][col]; }

  /// Outgoing row feeding the given side: row 0 for Right, row 1 for Left.
  const Row& row(Side side) const { return rows_[side == Side::Right ? 0 : 1]; }

  Complex determinant() const;

  ScatterMatrix& operator+=(const ScatterMatrix& other);
  ScatterMatrix& operator-=(const ScatterMatrix& other);
  ScatterMatrix& operator*=(Complex scale);

  friend ScatterMatrix operator+(ScatterMatrix a, const ScatterMatrix& b) { return a += b; }
  friend ScatterMatrix operator-(ScatterMatrix a, const ScatterMatrix& b) { return a -= b; }
  friend ScatterMatrix operator*(ScatterMatrix a, Complex s) { return a *= s; }
  friend ScatterMatrix operator*(Complex s, ScatterMatrix a) { return a *= s; }
  friend ScatterMatrix operator*(const ScatterMatrix& a, const ScatterMatrix& b);

  friend bool operator==(const ScatterMatrix&, const ScatterMatrix&) = default;

 private:
  std::array<Row, 2> rows_{};
};

/// Squared Euclidean norm of a matrix row.
double norm_sq(const ScatterMatrix::Row& row);

/// <a, b> = sum_k a_k * conj(b_k).
Complex inner(const ScatterMatrix::Row& a, const ScatterMatrix::Row& b);

/// r+(omega) for Side::Right, r-(omega) for Side::Left:
///   r+-(w) = (-i mu0 +- 2 w lambda0) / (i mu0 + w (1 + lambda0^2)).
/// Evaluated as written for any real omega (negative frequencies included).
Complex reflection(double omega, Side side, const MirrorParams& p);

/// Common transmission amplitude s+ = s- = w (1 - lambda0^2) / (i mu0 + w (1 + lambda0^2)).
Complex transmission(double omega, const MirrorParams& p);

/// Zeroth-order scattering matrix (s+, r+; r-, s-). At omega == 0 this is
/// exactly (0, -1; -1, 0).
ScatterMatrix s0_matrix(double omega, const MirrorParams& p);

/// First-order correction from mirror motion q(t) = eps * g(t):
///   dS_q(w, w') = i eps w' G(w - w') [S0(w) eta - eta S0(w')],
/// where g_hat is the caller-supplied value of G(w - w').
ScatterMatrix delta_s_q(double omega, double omega_prime, Complex g_hat, double eps,
                        const MirrorParams& p);

/// First-order correction from mu(t) = mu0 [1 + eps f(t)] on a mirror at rest:
///   dS_mu(w, w') = eps alpha(w, w') [J2 + S0(w')],
///   alpha(w, w') = -i mu0 F(w - w') / (i mu0 + w (1 + lambda0^2)),
/// where f_hat is the caller-supplied value of F(w - w').
ScatterMatrix delta_s_mu(double omega, double omega_prime, Complex f_hat, double eps,
                         const MirrorParams& p);

}  // namespace casimir

#endif  // CASIMIR_SCATTERING_HPP_

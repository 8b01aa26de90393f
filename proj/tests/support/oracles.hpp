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
// Independent reference computations for the test suites. Nothing in here
// calls into the library code it is used to check.
#ifndef CASIMIR_TESTS_SUPPORT_ORACLES_HPP_
#define CASIMIR_TESTS_SUPPORT_ORACLES_HPP_

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/rational.hpp>

namespace casimir::oracle {

using Rational = boost::rational<std::int64_t>;

/// Exact complex number over the rationals.
struct RComplex {
  Rational re{0};
  Rational im{0};

  friend RComplex operator+(RComplex a, RComplex b) { return {a.re + b.re, a.im + b.im}; }
  friend RComplex operator-(RComplex a, RComplex b) { return {a.re - b.re, a.im - b.im}; }
  friend RComplex operator*(RComplex a, RComplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RComplex operator/(RComplex a, RComplex b) {
    const Rational d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  std::complex<double> to_double() const {
    return {boost::rational_cast<double>(re), boost::rational_cast<double>(im)};
  }
};

using RMatrix = std::array<std::array<RComplex, 2>, 2>;

inline RComplex rc(std::int64_t num, std::int64_t den = 1) { return {Rational(num, den), 0}; }
inline const RComplex kIr{Rational(0), Rational(1)};

/// Zeroth-order matrix written out by hand for rational mu0, lambda0, omega.
inline RMatrix s0_exact(Rational omega, Rational mu, Rational lambda) {
  const RComplex w{omega, 0};
  const RComplex den = kIr * RComplex{mu, 0} + w * RComplex{1 + lambda * lambda, 0};
  const RComplex two_w_lambda{2 * omega * lambda, 0};
  const RComplex minus_i_mu{0, -mu};
  const RComplex s = RComplex{omega * (1 - lambda * lambda), 0} / den;
  return {{{s, (minus_i_mu + two_w_lambda) / den}, {(minus_i_mu - two_w_lambda) / den, s}}};
}

/// int_{-T}^{T} profile(t) e^{i w t} dt by composite Simpson with n (even) steps.
inline std::complex<double> time_domain_transform(const std::function<double(double)>& profile,
                                                  double omega, double half_span,
                                                  std::size_t n) {
  const double h = 2.0 * half_span / static_cast<double>(n);
  std::complex<double> sum{};
  for (std::size_t k = 0; k <= n; ++k) {
    const double t = -half_span + h * static_cast<double>(k);
    const double weight = (k == 0 || k == n) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    sum += weight * profile(t) * std::polar(1.0, omega * t);
  }
  return sum * (h / 3.0);
}

/// Locations where f changes strict sign on a uniform grid over (lo, hi),
/// refined by plain bisection to width tol.
inline std::vector<double> sign_change_scan(const std::function<double(double)>& f, double lo,
                                            double hi, std::size_t points, double tol) {
  std::vector<double> roots;
  double x_prev = lo + (hi - lo) / static_cast<double>(points + 1);
  double f_prev = f(x_prev);
  for (std::size_t k = 2; k <= points; ++k) {
    const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points + 1);
    const double fx = f(x);
    if ((f_prev < 0.0 && fx > 0.0) || (f_prev > 0.0 && fx < 0.0)) {
      double a = x_prev, b = x, fa = f_prev;
      while (b - a > tol) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    x_prev = x;
    f_prev = fx;
  }
  return roots;
}

/// Strict interior local maxima of samples.
inline std::size_t count_local_maxima(const std::vector<double>& y) {
  std::size_t count = 0;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i] > y[i - 1] && y[i] > y[i + 1]) ++count;
  }
  return count;
}

/// |sum_i eps_i e^{i phi_i}|^2
inline double phasor_intensity(const std::vector<double>& eps, const std::vector<double>& phi) {
  std::complex<double> sum{};
  for (std::size_t i = 0; i < eps.size(); ++i) sum += std::polar(eps[i], phi[i]);
  return std::norm(sum);
}

/// Composite Gauss-Legendre (5-point) over [a, b] with n panels; smooth integrands only.
inline double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                             std::size_t n) {
  static constexpr double x[5] = {0.0, 0.5384693101056831, -0.5384693101056831,
                                  0.9061798459386640, -0.9061798459386640};
  static constexpr double w[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                  0.2369268850561891, 0.2369268850561891};
  const double h = (b - a) / static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double mid = a + h * (static_cast<double>(k) + 0.5);
    for (int i = 0; i < 5; ++i) sum += w[i] * f(mid + 0.5 * h * x[i]);
  }
  return sum * 0.5 * h;
}

}  // namespace casimir::oracle

#endif  // CASIMIR_TESTS_SUPPORT_ORACLES_HPP_

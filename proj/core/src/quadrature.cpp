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
#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace casimir {
namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;
constexpr std::size_t kRulePoints = 21;

// A panel is either an ordinary interval of x, or an interval of t in
// [0, 1) standing for x = origin + t / (1 - t).
struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double error = 0.0;
  bool mapped = false;
};

struct ByError {
  bool operator()(const Panel& a, const Panel& b) const { return a.error < b.error; }
};

class Evaluator {
 public:
  Evaluator(const Integrand& f, double origin) : f_(f), origin_(origin) {}

  Panel estimate(double lo, double hi, bool mapped) {
    Panel p{lo, hi, 0.0, 0.0, mapped};
    double err = 0.0;
    if (mapped) {
      auto g = [this](double t) {
        const double s = 1.0 - t;
        return call(origin_ + t / s) / (s * s);
      };
      p.value = Rule::integrate(g, lo, hi, 0, 0.0, &err);
    } else {
      auto g = [this](double x) { return call(x); };
      p.value = Rule::integrate(g, lo, hi, 0, 0.0, &err);
    }
    // Boost reports the error of the rule on [-1, 1]; rescale to [lo, hi].
    p.error = err * 0.5 * (hi - lo);
    return p;
  }

  std::size_t evaluations() const { return evaluations_; }
  bool saw_non_finite() const { return non_finite_; }

 private:
  double call(double x) {
    ++evaluations_;
    const double y = f_(x);
    if (!std::isfinite(y)) {
      non_finite_ = true;
      return 0.0;
    }
    return y;
  }

  const Integrand& f_;
  double origin_;
  std::size_t evaluations_ = 0;
  bool non_finite_ = false;
};

bool splittable(const Panel& p) {
  const double mid = 0.5 * (p.lo + p.hi);
  return mid > p.lo && mid < p.hi;
}

}  // namespace

IntegrationResult integrate(const Integrand& f, double a, double b,
                            const IntegrationOptions& options) {
  if (!std::isfinite(a) || std::isnan(b) || !(a < b)) {
    throw DomainError("integrate: need finite a < b (b may be kInfinity)");
  }
  if (!(options.rel_tol > 0.0) || options.abs_tol < 0.0) {
    throw DomainError("integrate: rel_tol must be > 0 and abs_tol >= 0");
  }

  std::vector<double> cuts{a};
  for (double h : options.hints) {
    if (std::isfinite(h) && h > a && h < b) cuts.push_back(h);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const bool semi_infinite = std::isinf(b);
  if (!semi_infinite) cuts.push_back(b);

  const double origin = cuts.back();
  Evaluator eval(f, origin);
  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  // Panels that can no longer be bisected in floating point.
  std::vector<Panel> frozen;

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    queue.push(eval.estimate(cuts[i], cuts[i + 1], false));
  }
  if (semi_infinite) {
    queue.push(eval.estimate(0.0, 0.5, true));
    queue.push(eval.estimate(0.5, 1.0, true));
  }

  auto totals = [&] {
    IntegrationResult r;
    auto copy = queue;
    while (!copy.empty()) {
      r.value += copy.top().value;
      r.error_estimate += copy.top().error;
      copy.pop();
    }
    for (const auto& p : frozen) {
      r.value += p.value;
      r.error_estimate += p.error;
    }
    r.evaluations = eval.evaluations();
    return r;
  };

  double value = 0.0;
  double error = 0.0;
  {
    const IntegrationResult r = totals();
    value = r.value;
    error = r.error_estimate;
  }

  auto converged = [&](double v, double e) {
    return e <= std::max(options.rel_tol * std::abs(v), options.abs_tol);
  };

  std::size_t since_resum = 0;
  while (!converged(value, error)) {
    if (eval.saw_non_finite()) break;
    if (queue.empty() || queue.size() + frozen.size() >= options.max_panels) break;
    Panel worst = queue.top();
    queue.pop();
    if (!splittable(worst)) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = eval.estimate(worst.lo, mid, worst.mapped);
    const Panel right = eval.estimate(mid, worst.hi, worst.mapped);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    // Running sums drift; refresh them now and then.
    if (++since_resum == 64) {
      const IntegrationResult r = totals();
      value = r.value;
      error = r.error_estimate;
      since_resum = 0;
    }
  }

  IntegrationResult result = totals();
  if (eval.saw_non_finite()) {
    throw QuadratureError("integrate: integrand returned a non-finite value", result);
  }
  if (!converged(result.value, result.error_estimate)) {
    std::ostringstream msg;
    msg << "integrate: tolerance not reached after " << result.evaluations
        << " evaluations (estimate " << result.value << ", error " << result.error_estimate
        << ")";
    throw QuadratureError(msg.str(), result);
  }
  return result;
}

IntegrationResult integrate(const Integrand& f, double a, double b, double rel_tol) {
  IntegrationOptions options;
  options.rel_tol = rel_tol;
  return integrate(f, a, b, options);
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("find_root: need finite lo < hi");
  }
  if (!(tol > 0.0)) throw DomainError("find_root: tol must be > 0");

  auto checked = [&f](double x) {
    const double y = f(x);
    if (std::isnan(y)) throw DomainError("find_root: function returned NaN");
    return y;
  };
  const double f_lo = checked(lo);
  const double f_hi = checked(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    std::ostringstream msg;
    msg << "find_root: no sign change on [" << lo << ", " << hi << "]";
    throw RootBracketError(msg.str());
  }

  constexpr double kUlps = 4.0 * std::numeric_limits<double>::epsilon();
  auto done = [tol](double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(b - a) <= std::max(tol, kUlps * scale);
  };
  std::uintmax_t max_iter = 500;
  const auto bracket =
      boost::math::tools::toms748_solve(checked, lo, hi, f_lo, f_hi, done, max_iter);
  return 0.5 * (bracket.first + bracket.second);
}

}  // namespace casimir

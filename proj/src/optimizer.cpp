// Copyright 2026 The vibriq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vibriq/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "vibriq/random.hpp"

namespace vibriq {

std::string_view optimizer_name(OptimizerKind kind) {
  return kind == OptimizerKind::NelderMead ? "nelder-mead" : "spsa";
}

OptimizerKind optimizer_from_name(std::string_view name) {
  if (name == "nelder-mead") return OptimizerKind::NelderMead;
  if (name == "spsa") return OptimizerKind::Spsa;
  throw std::invalid_argument("unknown optimizer '" + std::string(name) + "'");
}

namespace {

struct BudgetExhausted {};

using Point = std::vector<double>;

class Evaluator {
 public:
  Evaluator(const Objective& f, const OptimizerOptions& opt) : f_(f), opt_(opt) {}

  double operator()(const Point& x) {
    if (count_ >= opt_.max_evaluations) throw BudgetExhausted{};
    const double v = f_(x);
    ++count_;
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "minimize: objective returned " << v << " at evaluation " << count_ << ", params [";
      for (std::size_t i = 0; i < x.size(); ++i) msg << (i ? ", " : "") << x[i];
      msg << "]";
      throw std::runtime_error(msg.str());
    }
    if (best_trace_.empty() || v < best_f_) {
      best_f_ = v;
      best_x_ = x;
    }
    best_trace_.push_back(best_f_);
    return v;
  }

  bool stalled() const {
    if (best_trace_.size() <= opt_.window) return false;
    return best_trace_[best_trace_.size() - 1 - opt_.window] - best_f_ <= opt_.tolerance;
  }

  std::size_t count() const { return count_; }
  double best_value() const { return best_f_; }
  const Point& best_point() const { return best_x_; }
  bool any() const { return !best_trace_.empty(); }

 private:
  const Objective& f_;
  const OptimizerOptions& opt_;
  std::size_t count_ = 0;
  double best_f_ = 0.0;
  Point best_x_;
  std::vector<double> best_trace_;
};

// One Nelder-Mead descent with dimension-adaptive coefficients. Returns true
// when the simplex collapsed below tolerance.
bool nelder_mead_run(Evaluator& eval, const Point& start, double step, const OptimizerOptions& opt,
                     std::vector<double>& history) {
  const std::size_t n = start.size();
  const double dn = static_cast<double>(n);
  const double alpha = 1.0;
  const double gamma = 1.0 + 2.0 / dn;
  const double rho = 0.75 - 1.0 / (2.0 * dn);
  const double sigma = 1.0 - 1.0 / dn;

  std::vector<Point> x(n + 1, start);
  std::vector<double> f(n + 1);
  for (std::size_t i = 1; i <= n; ++i) x[i][i - 1] += step;
  for (std::size_t i = 0; i <= n; ++i) f[i] = eval(x[i]);

  std::vector<std::size_t> order(n + 1);
  Point centroid(n);
  auto along = [&](double t) {
    Point p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = centroid[j] + t * (x[order[n]][j] - centroid[j]);
    return p;
  };

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
    history.push_back(f[order[0]]);
    if (f[order[n]] - f[order[0]] <= opt.tolerance && eval.stalled()) return true;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += x[order[i]][j] / dn;
    }
    const std::size_t worst = order[n];
    const Point xr = along(-alpha);
    const double fr = eval(xr);
    if (fr < f[order[0]]) {
      const Point xe = along(-alpha * gamma);
      const double fe = eval(xe);
      if (fe < fr) {
        x[worst] = xe;
        f[worst] = fe;
      } else {
        x[worst] = xr;
        f[worst] = fr;
      }
      continue;
    }
    if (fr < f[order[n - 1]]) {
      x[worst] = xr;
      f[worst] = fr;
      continue;
    }
    const bool outside = fr < f[worst];
    const Point xc = outside ? along(-alpha * rho) : along(rho);
    const double fc = eval(xc);
    if (outside ? fc <= fr : fc < f[worst]) {
      x[worst] = xc;
      f[worst] = fc;
      continue;
    }
    const Point& best = x[order[0]];
    for (std::size_t i = 1; i <= n; ++i) {
      Point& xi = x[order[i]];
      for (std::size_t j = 0; j < n; ++j) xi[j] = best[j] + sigma * (xi[j] - best[j]);
      f[order[i]] = eval(xi);
    }
  }
}

OptimizationResult nelder_mead(const Objective& objective, const Point& start,
                               const OptimizerOptions& opt) {
  Evaluator eval(objective, opt);
  OptimizationResult r;
  try {
    if (start.empty()) {
      r.history.push_back(eval(start));
      r.converged = true;
    } else {
      // Restart from the incumbent until a fresh simplex stops paying off.
      double previous = eval(start);
      for (std::size_t restart = 0; restart <= opt.max_restarts; ++restart) {
        const Point from = eval.best_point();
        const bool collapsed = nelder_mead_run(eval, from, opt.initial_step, opt, r.history);
        const double now = eval.best_value();
        if (collapsed && restart > 0 && previous - now <= opt.tolerance) {
          r.converged = true;
          break;
        }
        previous = now;
      }
    }
  } catch (const BudgetExhausted&) {
  }
  r.params = eval.best_point();
  r.value = eval.best_value();
  r.evaluations = eval.count();
  if (r.history.empty() || r.history.back() != r.value) r.history.push_back(r.value);
  return r;
}

OptimizationResult spsa(const Objective& objective, Point x, const OptimizerOptions& opt) {
  Evaluator eval(objective, opt);
  Rng rng(opt.seed);
  OptimizationResult r;
  const std::size_t n = x.size();
  const double big_a = 0.01 * static_cast<double>(opt.max_evaluations) / 3.0;
  const double alpha = 0.602;
  const double gamma = 0.101;
  const double c = 0.1;

  auto gradient = [&](const Point& at, double ck) {
    Point delta(n);
    for (auto& d : delta) d = rng.below(2) ? 1.0 : -1.0;
    Point plus = at;
    Point minus = at;
    for (std::size_t j = 0; j < n; ++j) {
      plus[j] += ck * delta[j];
      minus[j] -= ck * delta[j];
    }
    const double diff = (eval(plus) - eval(minus)) / (2.0 * ck);
    for (auto& d : delta) d *= diff;
    return delta;
  };

  try {
    r.history.push_back(eval(x));
    if (n == 0) {
      r.converged = true;
    } else {
      // Calibrate the gain so the first update moves about `initial_step`.
      double mean_norm = 0.0;
      for (int s = 0; s < 5; ++s) {
        const Point g = gradient(x, c);
        mean_norm += std::sqrt(std::inner_product(g.begin(), g.end(), g.begin(), 0.0)) / 5.0;
      }
      const double a = mean_norm > 0.0
                           ? opt.initial_step * std::pow(big_a + 1.0, alpha) / mean_norm
                           : opt.initial_step;
      for (std::size_t k = 0;; ++k) {
        const double ak = a / std::pow(static_cast<double>(k) + 1.0 + big_a, alpha);
        const double ck = c / std::pow(static_cast<double>(k) + 1.0, gamma);
        const Point g = gradient(x, ck);
        for (std::size_t j = 0; j < n; ++j) x[j] -= ak * g[j];
        r.history.push_back(eval(x));
        if (eval.stalled()) {
          r.converged = true;
          break;
        }
      }
    }
  } catch (const BudgetExhausted&) {
  }
  r.params = eval.best_point();
  r.value = eval.best_value();
  r.evaluations = eval.count();
  return r;
}

}  // namespace

OptimizationResult minimize(const Objective& objective, std::vector<double> start,
                            const OptimizerOptions& options) {
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("minimize: tolerance must be > 0");
  if (options.max_evaluations == 0) throw std::invalid_argument("minimize: evaluation budget is zero");
  if (options.kind == OptimizerKind::Spsa) return spsa(objective, std::move(start), options);
  return nelder_mead(objective, start, options);
}

}  // namespace vibriq

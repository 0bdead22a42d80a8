#include "gibbs/bfgs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gibbs {

namespace {

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Evaluation bundle along the ray x + alpha d.
struct LineEval {
  double alpha = 0.0;
  double f = 0.0;
  double df = 0.0;  // directional derivative g.d
  std::vector<double> x;
  std::vector<double> g;
};

class LineSearch {
 public:
  LineSearch(const CostFn& cost, const GradientFn& gradient, std::span<const double> x0,
             std::span<const double> d, double f0, double df0, const BfgsOptions& opt,
             MinimizeResult& stats)
      : cost_(cost), gradient_(gradient), x0_(x0), d_(d), f0_(f0), df0_(df0), opt_(opt),
        stats_(stats) {}

  LineEval at(double alpha) {
    LineEval e;
    e.alpha = alpha;
    e.x.resize(x0_.size());
    for (std::size_t i = 0; i < x0_.size(); ++i) e.x[i] = x0_[i] + alpha * d_[i];
    e.f = cost_(e.x);
    ++stats_.cost_evaluations;
    e.g = gradient_(e.x);
    ++stats_.gradient_evaluations;
    e.df = dot(e.g, d_);
    return e;
  }

  bool armijo(const LineEval& e) const {
    return e.f <= f0_ + opt_.wolfe_c1 * e.alpha * df0_;
  }
  bool curvature(const LineEval& e) const { return std::abs(e.df) <= -opt_.wolfe_c2 * df0_; }

  // Strong Wolfe search (bracket then zoom). Returns false on failure.
  bool search(double alpha0, LineEval& out) {
    LineEval lo;  // alpha = 0 end of the bracket
    lo.alpha = 0.0;
    lo.f = f0_;
    lo.df = df0_;
    LineEval cur = at(alpha0);
    for (int i = 0; i < opt_.max_line_search_steps; ++i) {
      if (!std::isfinite(cur.f) || !armijo(cur) || (i > 0 && cur.f >= lo.f)) {
        return zoom(lo, cur, out);
      }
      if (curvature(cur)) {
        out = std::move(cur);
        return true;
      }
      if (cur.df >= 0.0) {
        return zoom(cur, lo, out);
      }
      lo = std::move(cur);
      const double next = std::min(2.0 * lo.alpha, kAlphaMax);
      if (next <= lo.alpha) break;
      cur = at(next);
    }
    return false;
  }

 private:
  // lo satisfies Armijo with the lower cost; hi brackets a Wolfe point.
  bool zoom(LineEval lo, LineEval hi, LineEval& out) {
    for (int i = 0; i < opt_.max_line_search_steps; ++i) {
      const double span = hi.alpha - lo.alpha;
      if (std::abs(span) < 1e-16) break;
      double trial = lo.alpha + 0.5 * span;
      if (std::isfinite(hi.f)) {
        // quadratic model through (lo.f, lo.df) and hi.f, safeguarded
        const double denom = hi.f - lo.f - lo.df * span;
        if (std::abs(denom) > 1e-300) {
          const double q = lo.alpha - 0.5 * lo.df * span * span / denom;
          const double margin = 0.1 * std::abs(span);
          if (q > std::min(lo.alpha, hi.alpha) + margin &&
              q < std::max(lo.alpha, hi.alpha) - margin) {
            trial = q;
          }
        }
      }
      LineEval cur = at(trial);
      if (!std::isfinite(cur.f) || !armijo(cur) || cur.f >= lo.f) {
        hi = std::move(cur);
      } else {
        if (curvature(cur)) {
          out = std::move(cur);
          return true;
        }
        if (cur.df * (hi.alpha - lo.alpha) >= 0.0) hi = std::move(lo);
        lo = std::move(cur);
      }
    }
    // accept the lower bracket end if it at least decreases the cost
    if (lo.alpha > 0.0 && lo.f < f0_ && !lo.x.empty()) {
      out = std::move(lo);
      return true;
    }
    return false;
  }

  static constexpr double kAlphaMax = 100.0;

  const CostFn& cost_;
  const GradientFn& gradient_;
  std::span<const double> x0_;
  std::span<const double> d_;
  double f0_;
  double df0_;
  const BfgsOptions& opt_;
  MinimizeResult& stats_;
};

}  // namespace

MinimizeResult bfgs_minimize(const CostFn& cost, const GradientFn& gradient,
                             std::vector<double> x0, const BfgsOptions& options) {
  const std::size_t n = x0.size();
  if (n == 0) throw std::invalid_argument("bfgs_minimize: empty parameter vector");
  for (double v : x0) {
    if (!std::isfinite(v)) throw std::invalid_argument("bfgs_minimize: x0 must be finite");
  }

  MinimizeResult result;
  result.x = std::move(x0);
  result.cost = cost(result.x);
  ++result.cost_evaluations;
  if (!std::isfinite(result.cost)) {
    throw std::invalid_argument("bfgs_minimize: cost at x0 is not finite");
  }
  std::vector<double> g = gradient(result.x);
  ++result.gradient_evaluations;
  result.gradient_norm = inf_norm(g);

  // inverse Hessian approximation, row-major
  std::vector<double> h(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) h[i * n + i] = 1.0;
  bool h_is_identity = true;

  std::vector<double> d(n), hy(n);
  auto record = [&](int iter) {
    if (options.record_trace) {
      result.trace.push_back(TracePoint{iter, result.cost, result.gradient_norm});
    }
  };
  record(0);

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    if (result.gradient_norm <= options.gradient_tolerance) {
      result.converged = true;
      break;
    }
    result.iterations = iter;

    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += h[i * n + j] * g[j];
      d[i] = -s;
    }
    double descent = dot(d, g);
    if (descent >= 0.0) {
      // reset to steepest descent when the model loses positive definiteness
      std::fill(h.begin(), h.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) h[i * n + i] = 1.0;
      h_is_identity = true;
      for (std::size_t i = 0; i < n; ++i) d[i] = -g[i];
      descent = dot(d, g);
    }

    LineSearch search(cost, gradient, result.x, d, result.cost, descent, options, result);
    const double alpha0 =
        (iter == 1) ? std::min(1.0, 1.0 / std::max(result.gradient_norm, 1e-12)) : 1.0;
    LineEval accepted;
    if (!search.search(alpha0, accepted)) {
      result.converged = false;
      break;
    }

    std::vector<double> s(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = accepted.x[i] - result.x[i];
      y[i] = accepted.g[i] - g[i];
    }
    const double df = result.cost - accepted.f;
    result.x = std::move(accepted.x);
    result.cost = accepted.f;
    g = std::move(accepted.g);
    result.gradient_norm = inf_norm(g);
    record(iter);

    if (inf_norm(s) <= options.step_tolerance || std::abs(df) <= options.function_tolerance) {
      result.converged = true;
      break;
    }

    const double sy = dot(s, y);
    if (sy > 1e-10 * std::sqrt(dot(s, s)) * std::sqrt(dot(y, y))) {
      if (h_is_identity) {
        // scale the initial inverse Hessian (Nocedal & Wright eq. 6.20)
        const double gamma = sy / dot(y, y);
        for (std::size_t i = 0; i < n; ++i) h[i * n + i] = gamma;
        h_is_identity = false;
      }
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += h[i * n + j] * y[j];
        hy[i] = acc;
      }
      const double yhy = dot(y, hy);
      const double rho = 1.0 / sy;
      const double c = (1.0 + rho * yhy) * rho;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          h[i * n + j] += c * s[i] * s[j] - rho * (hy[i] * s[j] + s[i] * hy[j]);
        }
      }
    }

    if (result.gradient_norm <= options.gradient_tolerance) {
      result.converged = true;
      break;
    }
  }

  if (result.gradient_norm <= options.gradient_tolerance) result.converged = true;
  return result;
}

}  // namespace gibbs

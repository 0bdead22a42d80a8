#pragma once

#include <functional>
#include <span>
#include <vector>

namespace gibbs {

struct BfgsOptions {
  int max_iterations = 2000;
  double gradient_tolerance = 1e-8;  // infinity norm
  double step_tolerance = 1e-12;     // infinity norm of the accepted step
  double function_tolerance = 1e-12;
  double wolfe_c1 = 1e-4;
  double wolfe_c2 = 0.9;
  int max_line_search_steps = 50;
  bool record_trace = false;
};

struct TracePoint {
  int iteration = 0;
  double cost = 0.0;
  double gradient_norm = 0.0;  // infinity norm
};

struct MinimizeResult {
  std::vector<double> x;
  double cost = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  int cost_evaluations = 0;
  int gradient_evaluations = 0;
  bool converged = false;
  std::vector<TracePoint> trace;  // accepted points, nonincreasing in cost
};

using CostFn = std::function<double(std::span<const double>)>;
using GradientFn = std::function<std::vector<double>(std::span<const double>)>;

// Quasi-Newton minimization with the inverse-Hessian BFGS update and a line
// search satisfying the strong Wolfe conditions. Terminates when the gradient
// infinity norm falls below gradient_tolerance, when the accepted step or
// cost change drops below the corresponding tolerance, or at max_iterations.
// A failed line search returns converged = false with the best point so far.
// Throws std::invalid_argument when the cost at x0 is not finite.
MinimizeResult bfgs_minimize(const CostFn& cost, const GradientFn& gradient,
                             std::vector<double> x0, const BfgsOptions& options = {});

}  // namespace gibbs

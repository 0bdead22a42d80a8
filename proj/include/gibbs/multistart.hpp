#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "gibbs/bfgs.hpp"
#include "gibbs/objective.hpp"

namespace gibbs {

struct OptimizationRun {
  std::uint64_t seed = 0;  // multistart base seed
  int run_index = 0;
  std::vector<double> initial_parameters;
  std::vector<double> final_parameters;
  CostBreakdown final_cost;
  int iterations = 0;
  int gradient_evaluations = 0;
  bool converged = false;
  // Uhlmann fidelity of the prepared system state against the exact reference;
  // NaN when no reference was computed.
  double fidelity = std::numeric_limits<double>::quiet_NaN();
  std::vector<TracePoint> trace;
};

struct MultistartResult {
  std::vector<OptimizationRun> runs;
  int best_index = -1;           // minimizes final free energy
  int best_fidelity_index = -1;  // maximizes fidelity (-1 without a reference)
  double best_fidelity = std::numeric_limits<double>::quiet_NaN();  // fidelity of runs[best_index]
};

struct MultistartOptions {
  int runs = 10;
  std::uint64_t seed = 0;
  BfgsOptions bfgs;
  bool compute_fidelity = true;  // against the exact Gibbs state (dense limit permitting)
  int dense_limit = kDefaultDenseLimit;
};

// Monte Carlo multistart: `runs` local BFGS optimizations from independent
// random initial angles, uniform on [0, 2pi). Run r draws from an RNG seeded
// deterministically by (seed, r); results are bitwise reproducible.
MultistartResult multistart_optimize(const FreeEnergyObjective& objective,
                                     const MultistartOptions& options);

// Initial angles of run r, exposed for reproducibility tests.
std::vector<double> multistart_initial_angles(int count, std::uint64_t seed, int run_index);

}  // namespace gibbs

#include "gibbs/multistart.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gibbs/metrics.hpp"
#include "gibbs/spectrum.hpp"

namespace gibbs {

std::vector<double> multistart_initial_angles(int count, std::uint64_t seed, int run_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(run_index)};
  std::mt19937_64 rng(seq);
  std::vector<double> angles(static_cast<std::size_t>(count));
  for (double& a : angles) {
    // top 53 bits -> uniform double in [0, 1); avoids distribution objects
    // whose output is implementation-defined
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    a = 2.0 * std::numbers::pi * u;
  }
  return angles;
}

MultistartResult multistart_optimize(const FreeEnergyObjective& objective,
                                     const MultistartOptions& options) {
  if (options.runs < 1) {
    throw std::invalid_argument("multistart_optimize: need at least one run");
  }

  std::optional<DensityMatrix> reference;
  if (options.compute_fidelity && objective.n() <= options.dense_limit) {
    reference = objective.entropy_only()
                    ? DensityMatrix::maximally_mixed(objective.n())
                    : gibbs_state_exact(objective.hamiltonian(), objective.beta(),
                                        options.dense_limit);
  }

  const CostFn cost = [&](std::span<const double> x) { return objective.cost(x); };
  const GradientFn grad = [&](std::span<const double> x) { return objective.gradient(x); };

  MultistartResult result;
  result.runs.reserve(static_cast<std::size_t>(options.runs));
  for (int r = 0; r < options.runs; ++r) {
    OptimizationRun run;
    run.seed = options.seed;
    run.run_index = r;
    run.initial_parameters =
        multistart_initial_angles(objective.parameter_count(), options.seed, r);

    MinimizeResult min = bfgs_minimize(cost, grad, run.initial_parameters, options.bfgs);
    run.final_parameters = std::move(min.x);
    run.final_cost = objective.evaluate_cost(run.final_parameters);
    run.iterations = min.iterations;
    run.gradient_evaluations = min.gradient_evaluations;
    run.converged = min.converged;
    run.trace = std::move(min.trace);
    if (reference) {
      run.fidelity =
          uhlmann_fidelity(objective.reduced_system_state(run.final_parameters), *reference);
    }
    result.runs.push_back(std::move(run));
  }

  result.best_index = 0;
  for (int r = 1; r < options.runs; ++r) {
    if (result.runs[static_cast<std::size_t>(r)].final_cost.free_energy <
        result.runs[static_cast<std::size_t>(result.best_index)].final_cost.free_energy) {
      result.best_index = r;
    }
  }
  if (reference) {
    result.best_fidelity = result.runs[static_cast<std::size_t>(result.best_index)].fidelity;
    result.best_fidelity_index = 0;
    for (int r = 1; r < options.runs; ++r) {
      if (result.runs[static_cast<std::size_t>(r)].fidelity >
          result.runs[static_cast<std::size_t>(result.best_fidelity_index)].fidelity) {
        result.best_fidelity_index = r;
      }
    }
  }
  return result;
}

}  // namespace gibbs

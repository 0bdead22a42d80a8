#include "gibbs/objective.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gibbs {

FreeEnergyObjective::FreeEnergyObjective(PauliHamiltonian hamiltonian, double beta, int layers_a,
                                         int layers_s)
    : hamiltonian_(std::move(hamiltonian)),
      beta_(beta),
      layers_a_(layers_a),
      layers_s_(layers_s),
      ancilla_(build_ancilla_ansatz(hamiltonian_.n_qubits(), layers_a)),
      ancilla_embedded_(Circuit(2 * hamiltonian_.n_qubits())),
      system_embedded_(Circuit(2 * hamiltonian_.n_qubits())),
      pqc_(build_gibbs_pqc(hamiltonian_.n_qubits(), layers_a, layers_s)),
      hamiltonian_on_system_(
          hamiltonian_.embedded(2 * hamiltonian_.n_qubits(), hamiltonian_.n_qubits())) {
  if (beta_ <= 0.0 || !std::isfinite(beta_)) {
    throw std::invalid_argument(
        "FreeEnergyObjective: beta must be > 0 (use infinite_temperature for beta = 0), got " +
        std::to_string(beta_));
  }
  ancilla_embedded_.append_embedded(ancilla_, 0, 0);
  system_embedded_.append_embedded(build_system_ansatz(hamiltonian_.n_qubits(), layers_s),
                                   hamiltonian_.n_qubits(), 0);
}

FreeEnergyObjective FreeEnergyObjective::infinite_temperature(PauliHamiltonian hamiltonian,
                                                              int layers_a, int layers_s) {
  FreeEnergyObjective obj(std::move(hamiltonian), 1.0, layers_a, layers_s);
  obj.beta_ = 0.0;
  obj.entropy_only_ = true;
  return obj;
}

std::vector<double> FreeEnergyObjective::ancilla_probabilities(
    std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != theta_count()) {
    throw std::invalid_argument("ancilla_probabilities: expected " +
                                std::to_string(theta_count()) + " angles, got " +
                                std::to_string(theta.size()));
  }
  return ancilla_.simulate(theta).probabilities();
}

StateVector FreeEnergyObjective::mid_state(std::span<const double> theta) const {
  const int nq = n();
  StateVector state(2 * nq);
  ancilla_embedded_.apply(state, theta);
  for (int i = 0; i < nq; ++i) apply_cnot(state, i, nq + i);
  return state;
}

double FreeEnergyObjective::energy_from_mid(const StateVector& mid,
                                            std::span<const double> phi) const {
  StateVector state = mid;
  system_embedded_.apply(state, phi);
  return expectation_value(state, hamiltonian_on_system_);
}

CostBreakdown FreeEnergyObjective::evaluate_cost(std::span<const double> params) const {
  if (static_cast<int>(params.size()) != parameter_count()) {
    throw std::invalid_argument("evaluate_cost: expected " + std::to_string(parameter_count()) +
                                " parameters, got " + std::to_string(params.size()));
  }
  const auto theta = params.first(static_cast<std::size_t>(theta_count()));
  const auto phi = params.last(static_cast<std::size_t>(phi_count()));
  CostBreakdown out;
  out.probabilities = ancilla_probabilities(theta);
  out.entropy_term = entropy_of_probabilities(out.probabilities);
  out.energy_term = energy_from_mid(mid_state(theta), phi);
  out.free_energy =
      entropy_only_ ? -out.entropy_term : out.energy_term - out.entropy_term / beta_;
  return out;
}

double FreeEnergyObjective::cost(std::span<const double> params) const {
  return evaluate_cost(params).free_energy;
}

std::vector<double> FreeEnergyObjective::gradient(std::span<const double> params) const {
  if (static_cast<int>(params.size()) != parameter_count()) {
    throw std::invalid_argument("gradient: parameter length mismatch");
  }
  const int n_theta = theta_count();
  const int n_total = parameter_count();
  std::vector<double> x(params.begin(), params.end());
  std::vector<double> g(static_cast<std::size_t>(n_total), 0.0);

  for (int k = 0; k < n_theta; ++k) {
    const double saved = x[static_cast<std::size_t>(k)];
    x[static_cast<std::size_t>(k)] = saved + kFdStep;
    const double fp = cost(x);
    x[static_cast<std::size_t>(k)] = saved - kFdStep;
    const double fm = cost(x);
    x[static_cast<std::size_t>(k)] = saved;
    g[static_cast<std::size_t>(k)] = (fp - fm) / (2.0 * kFdStep);
  }

  if (phi_count() > 0) {
    if (entropy_only_) {
      // entropy depends on theta only; phi gradient vanishes identically
      return g;
    }
    const auto theta = std::span<const double>(x).first(static_cast<std::size_t>(n_theta));
    const StateVector mid = mid_state(theta);
    std::vector<double> phi(x.begin() + n_theta, x.end());
    for (int k = 0; k < phi_count(); ++k) {
      const double saved = phi[static_cast<std::size_t>(k)];
      phi[static_cast<std::size_t>(k)] = saved + kFdStep;
      const double ep = energy_from_mid(mid, phi);
      phi[static_cast<std::size_t>(k)] = saved - kFdStep;
      const double em = energy_from_mid(mid, phi);
      phi[static_cast<std::size_t>(k)] = saved;
      g[static_cast<std::size_t>(n_theta + k)] = (ep - em) / (2.0 * kFdStep);
    }
  }
  return g;
}

DensityMatrix FreeEnergyObjective::reduced_system_state(std::span<const double> params) const {
  const StateVector full = pqc_.simulate(params);
  std::vector<int> keep(static_cast<std::size_t>(n()));
  for (int i = 0; i < n(); ++i) keep[static_cast<std::size_t>(i)] = n() + i;
  return partial_trace(full, keep);
}

}  // namespace gibbs

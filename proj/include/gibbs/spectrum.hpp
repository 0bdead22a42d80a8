#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "gibbs/density.hpp"
#include "gibbs/pauli.hpp"
#include "gibbs/statevector.hpp"

namespace gibbs {

// Full eigendecomposition of a Hamiltonian together with the Boltzmann
// weights at inverse temperature beta (k_B = 1; beta carries units 1/energy).
struct SpectrumResult {
  double beta = 0.0;
  std::vector<double> energies;  // ascending
  Eigen::MatrixXcd eigenvectors;  // columns |E_i>; empty when not requested
  // ln Z is the canonical finite quantity; partition_function = exp(log_...)
  // overflows to inf once beta * |E_0| exceeds ~709.
  double log_partition_function = 0.0;
  double partition_function = 0.0;
  std::vector<double> boltzmann_probs;  // e^{-beta E_i} / Z, same order as energies

  double free_energy() const { return -log_partition_function / beta; }
};

// Dense eigendecomposition plus Boltzmann weights. Probabilities are computed
// with the ground-energy shift so they stay finite for beta up to 1e4.
// Throws std::invalid_argument for beta < 0 and CapacityError above the dense limit.
SpectrumResult exact_spectrum(const PauliHamiltonian& h, double beta, bool with_vectors = true,
                              int dense_limit = kDefaultDenseLimit);

// sum_i p_i |E_i><E_i|.
DensityMatrix gibbs_state_exact(const PauliHamiltonian& h, double beta,
                                int dense_limit = kDefaultDenseLimit);

// Purification sum_i sqrt(p_i) |E_i>_A (x) |conj(E_i)>_B on 2n qubits, register A
// on qubits 0..n-1 and B on qubits n..2n-1. Tracing out B yields the Gibbs
// state exactly; tracing out A yields its transpose (equal for the real
// Hamiltonians built here).
StateVector tfd_state(const PauliHamiltonian& h, double beta,
                      int dense_limit = kDefaultDenseLimit);

// k largest Boltzmann probabilities (lowest k energies) of the XY chain,
// in descending order.
std::vector<double> lowest_k_boltzmann_probs(int n, double gamma, double h, double beta, int k,
                                             int dense_limit = kDefaultDenseLimit);

// CSV with columns index,energy,probability.
void write_spectrum_csv(std::ostream& out, const SpectrumResult& spectrum);

}  // namespace gibbs

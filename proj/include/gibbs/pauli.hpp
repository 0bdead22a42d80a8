#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace gibbs {

inline constexpr int kDefaultDenseLimit = 14;

enum class Pauli : std::uint8_t { X, Y, Z };

// One weighted Pauli string, e.g. -0.75 * X_0 X_1.
struct PauliTerm {
  double coefficient = 0.0;
  std::vector<std::pair<int, Pauli>> paulis;  // (qubit, axis), strictly ascending qubit

  PauliTerm() = default;
  PauliTerm(double coeff, std::vector<std::pair<int, Pauli>> ops);
};

// Hermitian operator given as a real-weighted sum of Pauli strings.
class PauliHamiltonian {
 public:
  PauliHamiltonian(int n_qubits, std::vector<PauliTerm> terms);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  // Same operator acting on qubits [offset, offset + n) of a larger register.
  PauliHamiltonian embedded(int total_qubits, int offset) const;

  // Sum of |coefficients|; upper bound on the spectral radius.
  double coefficient_norm() const;

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
};

// Bit masks and phase data for applying one Pauli string to basis states:
// P|i> = global_phase * (-1)^popcount(i & sign_mask) |i ^ flip_mask>.
struct PauliTermMasks {
  std::uint64_t flip_mask = 0;  // X and Y positions
  std::uint64_t sign_mask = 0;  // Y and Z positions
  std::complex<double> global_phase{1.0, 0.0};  // i^(#Y)
  double coefficient = 0.0;
};

PauliTermMasks term_masks(const PauliTerm& term);

// Periodic XY chain, Eq.-literal sum over i = 0..n-1 with site n == site 0:
//   -(1+gamma)/2 sx_i sx_{i+1} - (1-gamma)/2 sy_i sy_{i+1} - h sz_i.
// At n = 2 the periodic sum visits the single bond twice, doubling its weight.
PauliHamiltonian build_xy_hamiltonian(int n, double gamma, double h);

struct QbmEdge {
  int i = 0;
  int j = 0;
  double weight = 0.0;
};

// Quantum Boltzmann machine Hamiltonian: -sum_i b_i sz_i - sum_{ij} w_ij sz_i sz_j.
PauliHamiltonian build_qbm_hamiltonian(const std::vector<double>& biases,
                                       const std::vector<QbmEdge>& edges);

// Dense matrix of the operator. Throws CapacityError above `dense_limit` qubits.
Eigen::MatrixXcd to_dense(const PauliHamiltonian& h, int dense_limit = kDefaultDenseLimit);

// True when every term carries an even number of Y factors, i.e. the dense
// matrix is real in the computational basis.
bool is_real_in_computational_basis(const PauliHamiltonian& h);

// True when every term flips an even number of bits, i.e. the operator
// commutes with the parity operator (tensor product of sz).
bool preserves_parity(const PauliHamiltonian& h);

}  // namespace gibbs

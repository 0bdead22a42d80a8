#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gibbs/pauli.hpp"
#include "gibbs/statevector.hpp"

namespace gibbs {

// Hermitian, positive semi-definite, unit-trace matrix of a mixed state.
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, Eigen::MatrixXcd elements);

  static DensityMatrix maximally_mixed(int n_qubits);
  static DensityMatrix pure(const StateVector& state);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return elements_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return elements_; }

  double purity() const;  // Tr rho^2

  // Largest violation of the Hermiticity/trace/positivity invariants.
  // hermiticity and |Tr-1| compared against 1e-12, min eigenvalue against -1e-10.
  bool is_valid(double hermitian_tol = 1e-12, double trace_tol = 1e-12,
                double eigen_tol = 1e-10) const;

 private:
  int n_qubits_;
  Eigen::MatrixXcd elements_;
};

// |psi><psi| of a normalized state.
DensityMatrix density_from_state(const StateVector& state);

// Reduced density matrix on the kept qubits, in ascending kept-qubit order
// (bit k of the reduced index is the state of qubit keep[k]).
// `keep` must be a nonempty proper subset of the qubits.
DensityMatrix partial_trace(const StateVector& state, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

inline DensityMatrix partial_trace(const StateVector& s, std::initializer_list<int> keep) {
  return partial_trace(s, std::span<const int>(keep.begin(), keep.size()));
}
inline DensityMatrix partial_trace(const DensityMatrix& r, std::initializer_list<int> keep) {
  return partial_trace(r, std::span<const int>(keep.begin(), keep.size()));
}

// Von Neumann entropy in nats; eigenvalues below 1e-12 are clamped to zero.
double entropy_of_density(const DensityMatrix& rho);

// -sum p ln p with 0 ln 0 = 0; entries below 1e-12 treated as zero.
double entropy_of_probabilities(std::span<const double> p);

// Tr(H rho) resp. <psi|H|psi>. The imaginary residue must stay below 1e-10
// and is discarded.
double expectation_value(const StateVector& state, const PauliHamiltonian& h);
double expectation_value(const DensityMatrix& rho, const PauliHamiltonian& h);

}  // namespace gibbs

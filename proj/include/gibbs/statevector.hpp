#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gibbs {

using cplx = std::complex<double>;

// Dense amplitude vector of an n-qubit pure state. Qubit 0 is the
// least-significant bit of the basis-state index and |0> = (1 0)^T.
class StateVector {
 public:
  // |0...0> on n qubits.
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, std::vector<cplx> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }

  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  const std::vector<cplx>& amplitudes() const { return amps_; }

  double norm() const;
  double probability(std::size_t basis_state) const;
  // |amplitude|^2 for every basis state.
  std::vector<double> probabilities() const;

 private:
  int n_qubits_;
  std::vector<cplx> amps_;
};

// Unitary matrix on 1 or 2 qubits, row-major. For a two-qubit gate applied
// to targets (a, b), qubit a indexes the most significant bit of the matrix
// row/column, i.e. the matrix is written in the |q_a q_b> basis.
struct GateMatrix {
  int arity = 1;
  std::array<cplx, 16> m{};

  int dim() const { return 1 << arity; }
  cplx& at(int r, int c) { return m[static_cast<std::size_t>(r * dim() + c)]; }
  cplx at(int r, int c) const { return m[static_cast<std::size_t>(r * dim() + c)]; }

  // max-abs deviation of U^dag U from the identity
  double unitarity_error() const;
};

// Applies `gate` to the target qubits in place, identity elsewhere.
// Throws std::invalid_argument for duplicate or out-of-range targets.
void apply_gate(StateVector& state, const GateMatrix& gate, std::span<const int> targets);

inline void apply_gate(StateVector& state, const GateMatrix& gate, std::initializer_list<int> targets) {
  apply_gate(state, gate, std::span<const int>(targets.begin(), targets.size()));
}

// CNOT without building a matrix; used by the circuit simulator.
void apply_cnot(StateVector& state, int control, int target);

}  // namespace gibbs

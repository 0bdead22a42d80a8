#pragma once

#include "gibbs/circuit.hpp"
#include "gibbs/statevector.hpp"

namespace gibbs {

// Parity-preserving two-parameter gate, product R_YX(phi_j) . R_XY(phi_i):
//   [  cos S   0       0      sin S ]        S = (phi_i + phi_j)/2
//   [  0       cos D  -sin D  0     ]        D = (phi_i - phi_j)/2
//   [  0       sin D   cos D  0     ]
//   [ -sin S   0       0      cos S ]
GateMatrix rp_matrix(double phi_i, double phi_j);

// Two-qubit fragment over {RZ, sqrtX, CNOT} equal to rp_matrix up to global
// phase; exactly 2 CNOT, 6 sqrtX and 10 RZ gates.
Circuit decompose_rp(double phi_i, double phi_j);

// Brick-wall RY + CNOT-ring ansatz for the ancilla register: `layers` blocks
// of one RY column followed by a CNOT ring, then a final RY column.
// n(layers + 1) parameters, n * layers CNOTs, real amplitudes throughout.
Circuit build_ancilla_ansatz(int n, int layers);

// Brick-wall of R_P gates: per layer an even-odd sublayer, an odd-even
// sublayer and the ring-closure pair (n-1, 0); n R_P gates and 2n parameters
// per layer.
Circuit build_system_ansatz(int n, int layers);

// Full preparation circuit on 2n qubits: U_A(theta) on qubits 0..n-1,
// CNOTs (A_i -> S_i), U_S(phi) on qubits n..2n-1. The parameter vector is
// theta followed by phi.
Circuit build_gibbs_pqc(int n, int layers_a, int layers_s);

// Purification circuit: U_A(theta), CNOT_AS, then U_S(phi) on both registers
// with shared phi slots.
Circuit build_tfd_circuit(int n, int layers_a, int layers_s);

struct ResourceCount {
  long parameters = 0;
  long cnot_gates = 0;
  long sqrt_x_gates = 0;
  long circuit_depth = 0;  // CNOT depth
  bool formulas_applicable = true;  // closed forms stated for n > 2 only
};

// Closed-form resource scaling of the preparation circuit, with
// P = 2 for even n and 3 for odd n:
//   parameters  n(l_A + 1) + 2 n l_S
//   CNOTs       n l_A + 2 n l_S + n
//   sqrtX       2n(l_A + 1) + 6 n l_S
//   depth       P l_A + 2 P l_S + 1
// For n = 2 the counts are measured from the built circuit instead and
// formulas_applicable is false.
ResourceCount resource_counts(int n, int layers_a, int layers_s);

// Census of an actually built circuit after Ry/R_P decomposition.
ResourceCount measured_resource_counts(const Circuit& pqc);

}  // namespace gibbs

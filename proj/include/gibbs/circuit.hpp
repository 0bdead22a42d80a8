#pragma once

#include <span>
#include <string>
#include <vector>

#include "gibbs/statevector.hpp"

namespace gibbs {

enum class GateKind { Ry, Rz, SqrtX, Cnot, Rxy, Ryx, Rp, Barrier };

const char* gate_kind_name(GateKind kind);

// angle = offset + scale * params[slot]; slot = -1 means a fixed angle.
struct AngleRef {
  int slot = -1;
  double scale = 1.0;
  double offset = 0.0;

  static AngleRef fixed(double angle) { return AngleRef{-1, 0.0, angle}; }
  static AngleRef param(int slot, double scale = 1.0, double offset = 0.0) {
    return AngleRef{slot, scale, offset};
  }
  double resolve(std::span<const double> params) const {
    return slot < 0 ? offset : offset + scale * params[static_cast<std::size_t>(slot)];
  }
};

struct Gate {
  GateKind kind = GateKind::Barrier;
  int q0 = -1;
  int q1 = -1;          // second qubit for Cnot/Rxy/Ryx/Rp (q0 = control / first factor)
  AngleRef angle0;      // rotation angle; Rp uses angle0 = phi_i, angle1 = phi_j
  AngleRef angle1;

  int arity() const;
  int angle_count() const;
};

// Ordered gate list with parameter slots. Barriers separate structural blocks
// and act as synchronization points for the depth census.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  int parameter_count() const { return parameter_count_; }
  const std::vector<Gate>& gates() const { return gates_; }

  int new_parameter();  // returns the next free slot index

  void add_ry(int q, AngleRef angle);
  void add_rz(int q, AngleRef angle);
  void add_sqrt_x(int q);
  void add_cnot(int control, int target);
  void add_rxy(int a, int b, AngleRef angle);
  void add_ryx(int a, int b, AngleRef angle);
  void add_rp(int a, int b, AngleRef phi_i, AngleRef phi_j);
  void add_barrier();

  // Appends `other` with its qubits shifted by qubit_offset and its parameter
  // slots shifted by slot_offset (parameter_count grows as needed).
  void append_embedded(const Circuit& other, int qubit_offset, int slot_offset);

  // Every slot in [0, parameter_count) referenced at least once, targets valid.
  void validate() const;

  // Applies the circuit to `state` (must have n_qubits()).
  void apply(StateVector& state, std::span<const double> params) const;
  // Circuit applied to |0...0>.
  StateVector simulate(std::span<const double> params) const;
  // Full 2^n x 2^n unitary, column by column. Intended for small n in tests
  // and property checks.
  std::vector<std::vector<cplx>> unitary(std::span<const double> params) const;

  // Same circuit over the {Rz, sqrt(X), Cnot} basis: Ry and Rp gates are
  // replaced by their decompositions, barriers are preserved.
  Circuit decomposed() const;

  struct Census {
    int ry = 0, rz = 0, sqrt_x = 0, cnot = 0, rxy = 0, ryx = 0, rp = 0;
    int parameters = 0;
    int cnot_depth = 0;  // barrier-aligned depth counting CNOT gates only
  };
  Census census() const;

  // Gate list as JSON (kind, targets, slot/scale/offset per angle).
  std::string to_json() const;

 private:
  void check_qubit(int q) const;
  void note_slot(const AngleRef& a);

  int n_qubits_;
  int parameter_count_ = 0;
  std::vector<Gate> gates_;
};

// Hardware-basis expansions shared by Circuit::decomposed() and the ansatz
// module. Both are exact up to a global phase.
void emit_ry_as_rz_sx(Circuit& c, int q, AngleRef theta);
void emit_rp_as_cx_sx_rz(Circuit& c, int a, int b, AngleRef phi_i, AngleRef phi_j);

}  // namespace gibbs

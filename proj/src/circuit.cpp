#include "gibbs/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gibbs/ansatz.hpp"
#include "gibbs/gates.hpp"

namespace gibbs {

namespace {
constexpr double kPi = std::numbers::pi;
}

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::Ry: return "ry";
    case GateKind::Rz: return "rz";
    case GateKind::SqrtX: return "sx";
    case GateKind::Cnot: return "cnot";
    case GateKind::Rxy: return "rxy";
    case GateKind::Ryx: return "ryx";
    case GateKind::Rp: return "rp";
    case GateKind::Barrier: return "barrier";
  }
  return "?";
}

int Gate::arity() const {
  switch (kind) {
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::SqrtX:
      return 1;
    case GateKind::Cnot:
    case GateKind::Rxy:
    case GateKind::Ryx:
    case GateKind::Rp:
      return 2;
    case GateKind::Barrier:
      return 0;
  }
  return 0;
}

int Gate::angle_count() const {
  switch (kind) {
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::Rxy:
    case GateKind::Ryx:
      return 1;
    case GateKind::Rp:
      return 2;
    default:
      return 0;
  }
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("Circuit: need at least one qubit");
}

void Circuit::check_qubit(int q) const {
  if (q < 0 || q >= n_qubits_) {
    throw std::invalid_argument("Circuit: qubit " + std::to_string(q) + " out of range");
  }
}

void Circuit::note_slot(const AngleRef& a) {
  if (a.slot >= parameter_count_) parameter_count_ = a.slot + 1;
}

int Circuit::new_parameter() { return parameter_count_++; }

void Circuit::add_ry(int q, AngleRef angle) {
  check_qubit(q);
  note_slot(angle);
  gates_.push_back(Gate{GateKind::Ry, q, -1, angle, {}});
}

void Circuit::add_rz(int q, AngleRef angle) {
  check_qubit(q);
  note_slot(angle);
  gates_.push_back(Gate{GateKind::Rz, q, -1, angle, {}});
}

void Circuit::add_sqrt_x(int q) {
  check_qubit(q);
  gates_.push_back(Gate{GateKind::SqrtX, q, -1, {}, {}});
}

void Circuit::add_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw std::invalid_argument("Circuit: CNOT control equals target");
  gates_.push_back(Gate{GateKind::Cnot, control, target, {}, {}});
}

void Circuit::add_rxy(int a, int b, AngleRef angle) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) throw std::invalid_argument("Circuit: two-qubit gate needs distinct qubits");
  note_slot(angle);
  gates_.push_back(Gate{GateKind::Rxy, a, b, angle, {}});
}

void Circuit::add_ryx(int a, int b, AngleRef angle) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) throw std::invalid_argument("Circuit: two-qubit gate needs distinct qubits");
  note_slot(angle);
  gates_.push_back(Gate{GateKind::Ryx, a, b, angle, {}});
}

void Circuit::add_rp(int a, int b, AngleRef phi_i, AngleRef phi_j) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) throw std::invalid_argument("Circuit: two-qubit gate needs distinct qubits");
  note_slot(phi_i);
  note_slot(phi_j);
  gates_.push_back(Gate{GateKind::Rp, a, b, phi_i, phi_j});
}

void Circuit::add_barrier() { gates_.push_back(Gate{GateKind::Barrier, -1, -1, {}, {}}); }

void Circuit::append_embedded(const Circuit& other, int qubit_offset, int slot_offset) {
  if (qubit_offset < 0 || qubit_offset + other.n_qubits_ > n_qubits_) {
    throw std::invalid_argument("Circuit::append_embedded: register does not fit");
  }
  auto shift = [&](AngleRef a) {
    if (a.slot >= 0) a.slot += slot_offset;
    return a;
  };
  for (Gate g : other.gates_) {
    if (g.q0 >= 0) g.q0 += qubit_offset;
    if (g.q1 >= 0) g.q1 += qubit_offset;
    g.angle0 = shift(g.angle0);
    g.angle1 = shift(g.angle1);
    note_slot(g.angle0);
    note_slot(g.angle1);
    gates_.push_back(g);
  }
}

void Circuit::validate() const {
  std::vector<bool> used(static_cast<std::size_t>(parameter_count_), false);
  auto mark = [&](const AngleRef& a) {
    if (a.slot >= 0) used[static_cast<std::size_t>(a.slot)] = true;
  };
  for (const Gate& g : gates_) {
    if (g.arity() >= 1) check_qubit(g.q0);
    if (g.arity() == 2) {
      check_qubit(g.q1);
      if (g.q0 == g.q1) throw std::invalid_argument("Circuit: duplicate qubits in gate");
    }
    mark(g.angle0);
    mark(g.angle1);
  }
  for (int s = 0; s < parameter_count_; ++s) {
    if (!used[static_cast<std::size_t>(s)]) {
      throw std::invalid_argument("Circuit: parameter slot " + std::to_string(s) +
                                  " never referenced");
    }
  }
}

void Circuit::apply(StateVector& state, std::span<const double> params) const {
  if (state.n_qubits() != n_qubits_) {
    throw std::invalid_argument("Circuit::apply: state qubit count mismatch");
  }
  if (static_cast<int>(params.size()) != parameter_count_) {
    throw std::invalid_argument("Circuit::apply: expected " + std::to_string(parameter_count_) +
                                " parameters, got " + std::to_string(params.size()));
  }
  for (const Gate& g : gates_) {
    switch (g.kind) {
      case GateKind::Ry:
        apply_gate(state, gates::ry(g.angle0.resolve(params)), {g.q0});
        break;
      case GateKind::Rz:
        apply_gate(state, gates::rz(g.angle0.resolve(params)), {g.q0});
        break;
      case GateKind::SqrtX:
        apply_gate(state, gates::sqrt_x(), {g.q0});
        break;
      case GateKind::Cnot:
        apply_cnot(state, g.q0, g.q1);
        break;
      case GateKind::Rxy:
        apply_gate(state, gates::rxy(g.angle0.resolve(params)), {g.q0, g.q1});
        break;
      case GateKind::Ryx:
        apply_gate(state, gates::ryx(g.angle0.resolve(params)), {g.q0, g.q1});
        break;
      case GateKind::Rp:
        apply_gate(state, rp_matrix(g.angle0.resolve(params), g.angle1.resolve(params)),
                   {g.q0, g.q1});
        break;
      case GateKind::Barrier:
        break;
    }
  }
}

StateVector Circuit::simulate(std::span<const double> params) const {
  StateVector state(n_qubits_);
  apply(state, params);
  return state;
}

std::vector<std::vector<cplx>> Circuit::unitary(std::span<const double> params) const {
  const std::size_t d = std::size_t{1} << n_qubits_;
  std::vector<std::vector<cplx>> cols(d);
  for (std::size_t c = 0; c < d; ++c) {
    StateVector basis(n_qubits_, [&] {
      std::vector<cplx> a(d, cplx{0.0, 0.0});
      a[c] = 1.0;
      return a;
    }());
    apply(basis, params);
    cols[c] = basis.amplitudes();
  }
  return cols;
}

void emit_ry_as_rz_sx(Circuit& c, int q, AngleRef theta) {
  // RY(t) = RZ(pi) . sqrtX . RZ(t - pi) . sqrtX . RZ(0) up to global phase
  c.add_rz(q, AngleRef::fixed(0.0));
  c.add_sqrt_x(q);
  c.add_rz(q, AngleRef{theta.slot, theta.scale, theta.offset - kPi});
  c.add_sqrt_x(q);
  c.add_rz(q, AngleRef::fixed(kPi));
}

void emit_rp_as_cx_sx_rz(Circuit& c, int a, int b, AngleRef phi_i, AngleRef phi_j) {
  // R_P(pi, pj) = (Vi (x) Vj)^dag . CX . (RX_a(-pi) (x) RZ_b(-pj)) . CX . (Vi (x) Vj)
  // with Vi = RX(pi/2) on qubit a and Vj = RZ(pi) RX(pi/2) RZ(pi/2) on qubit b,
  // expanded over {RZ, sqrtX, CNOT} block by block (global phase dropped).
  const AngleRef minus_phi_i{phi_i.slot, -phi_i.scale, -phi_i.offset - kPi};
  const AngleRef minus_phi_j{phi_j.slot, -phi_j.scale, -phi_j.offset};

  c.add_sqrt_x(a);
  c.add_rz(b, AngleRef::fixed(kPi / 2));
  c.add_sqrt_x(b);
  c.add_rz(b, AngleRef::fixed(kPi));

  c.add_cnot(a, b);

  c.add_rz(a, AngleRef::fixed(kPi / 2));
  c.add_sqrt_x(a);
  c.add_rz(a, minus_phi_i);
  c.add_sqrt_x(a);
  c.add_rz(a, AngleRef::fixed(kPi / 2));
  c.add_rz(b, minus_phi_j);

  c.add_cnot(a, b);

  c.add_rz(a, AngleRef::fixed(-kPi));
  c.add_sqrt_x(a);
  c.add_rz(a, AngleRef::fixed(kPi));
  c.add_rz(b, AngleRef::fixed(-2 * kPi));
  c.add_sqrt_x(b);
  c.add_rz(b, AngleRef::fixed(kPi / 2));
}

Circuit Circuit::decomposed() const {
  Circuit out(n_qubits_);
  for (const Gate& g : gates_) {
    switch (g.kind) {
      case GateKind::Ry:
        emit_ry_as_rz_sx(out, g.q0, g.angle0);
        break;
      case GateKind::Rp:
        emit_rp_as_cx_sx_rz(out, g.q0, g.q1, g.angle0, g.angle1);
        break;
      case GateKind::Rxy:
      case GateKind::Ryx:
        throw std::invalid_argument("Circuit::decomposed: bare Rxy/Ryx not supported; use Rp");
      case GateKind::Rz:
        out.add_rz(g.q0, g.angle0);
        break;
      case GateKind::SqrtX:
        out.add_sqrt_x(g.q0);
        break;
      case GateKind::Cnot:
        out.add_cnot(g.q0, g.q1);
        break;
      case GateKind::Barrier:
        out.add_barrier();
        break;
    }
  }
  out.parameter_count_ = std::max(out.parameter_count_, parameter_count_);
  return out;
}

Circuit::Census Circuit::census() const {
  Census c;
  c.parameters = parameter_count_;
  std::vector<int> busy_until(static_cast<std::size_t>(n_qubits_), 0);
  int floor = 0;
  for (const Gate& g : gates_) {
    switch (g.kind) {
      case GateKind::Ry: ++c.ry; break;
      case GateKind::Rz: ++c.rz; break;
      case GateKind::SqrtX: ++c.sqrt_x; break;
      case GateKind::Rxy: ++c.rxy; break;
      case GateKind::Ryx: ++c.ryx; break;
      case GateKind::Rp: ++c.rp; break;
      case GateKind::Cnot: {
        ++c.cnot;
        auto& a = busy_until[static_cast<std::size_t>(g.q0)];
        auto& b = busy_until[static_cast<std::size_t>(g.q1)];
        const int slot = std::max({floor, a, b}) + 1;
        a = b = slot;
        c.cnot_depth = std::max(c.cnot_depth, slot);
        break;
      }
      case GateKind::Barrier:
        for (int q = 0; q < n_qubits_; ++q) {
          floor = std::max(floor, busy_until[static_cast<std::size_t>(q)]);
        }
        break;
    }
  }
  return c;
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void angle_json(std::ostringstream& os, const char* name, const AngleRef& a) {
  os << ",\"" << name << "\":{";
  if (a.slot < 0) {
    os << "\"fixed\":" << fmt_double(a.offset);
  } else {
    os << "\"slot\":" << a.slot << ",\"scale\":" << fmt_double(a.scale)
       << ",\"offset\":" << fmt_double(a.offset);
  }
  os << "}";
}

}  // namespace

std::string Circuit::to_json() const {
  std::ostringstream os;
  os << "{\"n_qubits\":" << n_qubits_ << ",\"parameter_count\":" << parameter_count_
     << ",\"gates\":[";
  bool first = true;
  for (const Gate& g : gates_) {
    if (!first) os << ",";
    first = false;
    os << "{\"kind\":\"" << gate_kind_name(g.kind) << "\"";
    if (g.arity() == 1) {
      os << ",\"qubits\":[" << g.q0 << "]";
    } else if (g.arity() == 2) {
      os << ",\"qubits\":[" << g.q0 << "," << g.q1 << "]";
    }
    if (g.kind == GateKind::Rp) {
      angle_json(os, "angle_i", g.angle0);
      angle_json(os, "angle_j", g.angle1);
    } else if (g.angle_count() == 1) {
      angle_json(os, "angle", g.angle0);
    }
    os << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace gibbs

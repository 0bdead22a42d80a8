#include "gibbs/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gibbs {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw std::invalid_argument("StateVector: qubit count must be in [1, 30], got " +
                                std::to_string(n_qubits));
  }
  amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
  amps_[0] = cplx{1.0, 0.0};
}

StateVector::StateVector(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits < 1 || amps_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("StateVector: amplitude vector length must be 2^n");
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

double StateVector::probability(std::size_t basis_state) const {
  return std::norm(amps_.at(basis_state));
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

double GateMatrix::unitarity_error() const {
  const int d = dim();
  double worst = 0.0;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      cplx s{0.0, 0.0};
      for (int k = 0; k < d; ++k) s += std::conj(at(k, r)) * at(k, c);
      const double expect = (r == c) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(s - expect));
    }
  }
  return worst;
}

namespace {

void check_targets(const StateVector& state, std::span<const int> targets, int arity) {
  if (static_cast<int>(targets.size()) != arity) {
    throw std::invalid_argument("apply_gate: target count does not match gate arity");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= state.n_qubits()) {
      throw std::invalid_argument("apply_gate: target qubit " + std::to_string(targets[i]) +
                                  " out of range for " + std::to_string(state.n_qubits()) +
                                  " qubits");
    }
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[i] == targets[j]) {
        throw std::invalid_argument("apply_gate: duplicate target qubit " +
                                    std::to_string(targets[i]));
      }
    }
  }
}

void apply_1q(StateVector& state, const GateMatrix& g, int t) {
  const std::size_t dim = state.dim();
  const std::size_t mask = std::size_t{1} << t;
  const std::size_t lo = mask - 1;
  const std::size_t hi = ~lo;
  const cplx g00 = g.at(0, 0), g01 = g.at(0, 1), g10 = g.at(1, 0), g11 = g.at(1, 1);
  for (std::size_t k = 0; k < dim / 2; ++k) {
    const std::size_t i0 = ((k & hi) << 1) | (k & lo);
    const std::size_t i1 = i0 | mask;
    const cplx a0 = state[i0];
    const cplx a1 = state[i1];
    state[i0] = g00 * a0 + g01 * a1;
    state[i1] = g10 * a0 + g11 * a1;
  }
}

// targets (a, b): qubit a is the most significant bit of the matrix index
void apply_2q(StateVector& state, const GateMatrix& g, int a, int b) {
  const std::size_t dim = state.dim();
  const std::size_t ma = std::size_t{1} << a;
  const std::size_t mb = std::size_t{1} << b;
  const int qmin = std::min(a, b);
  const int qmax = std::max(a, b);
  const std::size_t lo_mask = (std::size_t{1} << qmin) - 1;
  const std::size_t mid_mask = ((std::size_t{1} << (qmax - 1)) - 1) ^ lo_mask;
  const std::size_t hi_mask = ~(lo_mask | mid_mask);
  for (std::size_t k = 0; k < dim / 4; ++k) {
    const std::size_t base = ((k & hi_mask) << 2) | ((k & mid_mask) << 1) | (k & lo_mask);
    const std::size_t idx[4] = {base, base | mb, base | ma, base | ma | mb};
    const cplx v0 = state[idx[0]], v1 = state[idx[1]], v2 = state[idx[2]], v3 = state[idx[3]];
    for (int r = 0; r < 4; ++r) {
      state[idx[r]] = g.at(r, 0) * v0 + g.at(r, 1) * v1 + g.at(r, 2) * v2 + g.at(r, 3) * v3;
    }
  }
}

}  // namespace

void apply_gate(StateVector& state, const GateMatrix& gate, std::span<const int> targets) {
  check_targets(state, targets, gate.arity);
  if (gate.arity == 1) {
    apply_1q(state, gate, targets[0]);
  } else if (gate.arity == 2) {
    apply_2q(state, gate, targets[0], targets[1]);
  } else {
    throw std::invalid_argument("apply_gate: gate arity must be 1 or 2");
  }
}

void apply_cnot(StateVector& state, int control, int target) {
  const int t[2] = {control, target};
  check_targets(state, std::span<const int>(t, 2), 2);
  const std::size_t mc = std::size_t{1} << control;
  const std::size_t mt = std::size_t{1} << target;
  const std::size_t dim = state.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & mc) && !(i & mt)) {
      std::swap(state[i], state[i | mt]);
    }
  }
}

}  // namespace gibbs

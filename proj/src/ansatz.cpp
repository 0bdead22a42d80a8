#include "gibbs/ansatz.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gibbs {

GateMatrix rp_matrix(double phi_i, double phi_j) {
  if (!std::isfinite(phi_i) || !std::isfinite(phi_j)) {
    throw std::invalid_argument("rp_matrix: angles must be finite");
  }
  GateMatrix g;
  g.arity = 2;
  const double cs = std::cos((phi_i + phi_j) / 2.0), ss = std::sin((phi_i + phi_j) / 2.0);
  const double cd = std::cos((phi_i - phi_j) / 2.0), sd = std::sin((phi_i - phi_j) / 2.0);
  g.at(0, 0) = cs;
  g.at(0, 3) = ss;
  g.at(1, 1) = cd;
  g.at(1, 2) = -sd;
  g.at(2, 1) = sd;
  g.at(2, 2) = cd;
  g.at(3, 0) = -ss;
  g.at(3, 3) = cs;
  return g;
}

Circuit decompose_rp(double phi_i, double phi_j) {
  if (!std::isfinite(phi_i) || !std::isfinite(phi_j)) {
    throw std::invalid_argument("decompose_rp: angles must be finite");
  }
  Circuit fragment(2);
  emit_rp_as_cx_sx_rz(fragment, 0, 1, AngleRef::fixed(phi_i), AngleRef::fixed(phi_j));
  return fragment;
}

namespace {

// Neighbor pairs of one brick-wall ring: even-odd sublayer, odd-even
// sublayer, then the wrap pair (n-1, 0). n pairs in total.
std::vector<std::pair<int, int>> ring_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  for (int q = 0; q + 1 < n; q += 2) pairs.emplace_back(q, q + 1);
  for (int q = 1; q + 1 < n; q += 2) pairs.emplace_back(q, q + 1);
  pairs.emplace_back(n - 1, 0);
  return pairs;
}

void check_layers(int n, int layers) {
  if (n < 2) throw std::invalid_argument("ansatz: need n >= 2, got " + std::to_string(n));
  if (layers < 0) throw std::invalid_argument("ansatz: layer count must be >= 0");
}

}  // namespace

Circuit build_ancilla_ansatz(int n, int layers) {
  check_layers(n, layers);
  Circuit c(n);
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < n; ++q) c.add_ry(q, AngleRef::param(c.new_parameter()));
    for (const auto& [a, b] : ring_pairs(n)) c.add_cnot(a, b);
    c.add_barrier();
  }
  for (int q = 0; q < n; ++q) c.add_ry(q, AngleRef::param(c.new_parameter()));
  return c;
}

Circuit build_system_ansatz(int n, int layers) {
  check_layers(n, layers);
  Circuit c(n);
  for (int l = 0; l < layers; ++l) {
    for (const auto& [a, b] : ring_pairs(n)) {
      const int phi_i = c.new_parameter();
      const int phi_j = c.new_parameter();
      c.add_rp(a, b, AngleRef::param(phi_i), AngleRef::param(phi_j));
    }
    c.add_barrier();
  }
  return c;
}

Circuit build_gibbs_pqc(int n, int layers_a, int layers_s) {
  check_layers(n, layers_a);
  check_layers(n, layers_s);
  const Circuit ua = build_ancilla_ansatz(n, layers_a);
  const Circuit us = build_system_ansatz(n, layers_s);
  Circuit c(2 * n);
  c.append_embedded(ua, 0, 0);
  c.add_barrier();
  for (int i = 0; i < n; ++i) c.add_cnot(i, n + i);
  c.add_barrier();
  c.append_embedded(us, n, ua.parameter_count());
  return c;
}

Circuit build_tfd_circuit(int n, int layers_a, int layers_s) {
  check_layers(n, layers_a);
  check_layers(n, layers_s);
  const Circuit ua = build_ancilla_ansatz(n, layers_a);
  const Circuit us = build_system_ansatz(n, layers_s);
  Circuit c(2 * n);
  c.append_embedded(ua, 0, 0);
  c.add_barrier();
  for (int i = 0; i < n; ++i) c.add_cnot(i, n + i);
  c.add_barrier();
  // the optimized system unitary goes on both registers, sharing phi slots
  c.append_embedded(us, n, ua.parameter_count());
  c.append_embedded(us, 0, ua.parameter_count());
  return c;
}

ResourceCount resource_counts(int n, int layers_a, int layers_s) {
  check_layers(n, layers_a);
  check_layers(n, layers_s);
  if (n == 2) {
    ResourceCount measured = measured_resource_counts(build_gibbs_pqc(2, layers_a, layers_s));
    measured.formulas_applicable = false;
    return measured;
  }
  const long ln = n, la = layers_a, ls = layers_s;
  const long p = (n % 2 == 0) ? 2 : 3;
  ResourceCount r;
  r.parameters = ln * (la + 1) + 2 * ln * ls;
  r.cnot_gates = ln * la + 2 * ln * ls + ln;
  r.sqrt_x_gates = 2 * ln * (la + 1) + 6 * ln * ls;
  r.circuit_depth = p * la + 2 * p * ls + 1;
  r.formulas_applicable = true;
  return r;
}

ResourceCount measured_resource_counts(const Circuit& pqc) {
  const Circuit::Census census = pqc.decomposed().census();
  ResourceCount r;
  r.parameters = census.parameters;
  r.cnot_gates = census.cnot;
  r.sqrt_x_gates = census.sqrt_x;
  r.circuit_depth = census.cnot_depth;
  return r;
}

}  // namespace gibbs

#include "gibbs/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gibbs/errors.hpp"

namespace gibbs {

PauliTerm::PauliTerm(double coeff, std::vector<std::pair<int, Pauli>> ops)
    : coefficient(coeff), paulis(std::move(ops)) {
  std::sort(paulis.begin(), paulis.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 1; k < paulis.size(); ++k) {
    if (paulis[k].first == paulis[k - 1].first) {
      throw std::invalid_argument("PauliTerm: repeated qubit index " +
                                  std::to_string(paulis[k].first));
    }
  }
  if (!std::isfinite(coefficient)) {
    throw std::invalid_argument("PauliTerm: coefficient must be finite");
  }
}

PauliHamiltonian::PauliHamiltonian(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  if (n_qubits < 1) {
    throw std::invalid_argument("PauliHamiltonian: need at least one qubit");
  }
  for (const auto& t : terms_) {
    for (const auto& [q, p] : t.paulis) {
      (void)p;
      if (q < 0 || q >= n_qubits_) {
        throw std::invalid_argument("PauliHamiltonian: qubit index " + std::to_string(q) +
                                    " out of range");
      }
    }
  }
}

PauliHamiltonian PauliHamiltonian::embedded(int total_qubits, int offset) const {
  if (offset < 0 || offset + n_qubits_ > total_qubits) {
    throw std::invalid_argument("PauliHamiltonian::embedded: register does not fit");
  }
  std::vector<PauliTerm> shifted = terms_;
  for (auto& t : shifted) {
    for (auto& [q, p] : t.paulis) {
      (void)p;
      q += offset;
    }
  }
  return PauliHamiltonian(total_qubits, std::move(shifted));
}

double PauliHamiltonian::coefficient_norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coefficient);
  return s;
}

PauliTermMasks term_masks(const PauliTerm& term) {
  PauliTermMasks m;
  m.coefficient = term.coefficient;
  int n_y = 0;
  for (const auto& [q, p] : term.paulis) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (p) {
      case Pauli::X:
        m.flip_mask |= bit;
        break;
      case Pauli::Y:
        m.flip_mask |= bit;
        m.sign_mask |= bit;
        ++n_y;
        break;
      case Pauli::Z:
        m.sign_mask |= bit;
        break;
    }
  }
  static const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  m.global_phase = i_pow[n_y % 4];
  return m;
}

PauliHamiltonian build_xy_hamiltonian(int n, double gamma, double h) {
  if (n < 2) {
    throw std::invalid_argument("build_xy_hamiltonian: need n >= 2, got " + std::to_string(n));
  }
  std::vector<PauliTerm> terms;
  terms.reserve(static_cast<std::size_t>(3 * n));
  const double cxx = -(1.0 + gamma) / 2.0;
  const double cyy = -(1.0 - gamma) / 2.0;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    terms.emplace_back(cxx, std::vector<std::pair<int, Pauli>>{{i, Pauli::X}, {j, Pauli::X}});
    terms.emplace_back(cyy, std::vector<std::pair<int, Pauli>>{{i, Pauli::Y}, {j, Pauli::Y}});
  }
  for (int i = 0; i < n; ++i) {
    terms.emplace_back(-h, std::vector<std::pair<int, Pauli>>{{i, Pauli::Z}});
  }
  return PauliHamiltonian(n, std::move(terms));
}

PauliHamiltonian build_qbm_hamiltonian(const std::vector<double>& biases,
                                       const std::vector<QbmEdge>& edges) {
  const int n = static_cast<int>(biases.size());
  if (n < 1) {
    throw std::invalid_argument("build_qbm_hamiltonian: need at least one node");
  }
  std::vector<PauliTerm> terms;
  for (int i = 0; i < n; ++i) {
    terms.emplace_back(-biases[static_cast<std::size_t>(i)],
                       std::vector<std::pair<int, Pauli>>{{i, Pauli::Z}});
  }
  for (const auto& e : edges) {
    if (e.i == e.j) {
      throw std::invalid_argument("build_qbm_hamiltonian: self-loop edge on node " +
                                  std::to_string(e.i));
    }
    if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n) {
      throw std::invalid_argument("build_qbm_hamiltonian: edge endpoint out of range");
    }
    terms.emplace_back(-e.weight,
                       std::vector<std::pair<int, Pauli>>{{e.i, Pauli::Z}, {e.j, Pauli::Z}});
  }
  return PauliHamiltonian(n, std::move(terms));
}

bool is_real_in_computational_basis(const PauliHamiltonian& h) {
  for (const auto& term : h.terms()) {
    int n_y = 0;
    for (const auto& [q, p] : term.paulis) {
      (void)q;
      if (p == Pauli::Y) ++n_y;
    }
    if (n_y % 2 != 0) return false;
  }
  return true;
}

bool preserves_parity(const PauliHamiltonian& h) {
  for (const auto& term : h.terms()) {
    if (std::popcount(term_masks(term).flip_mask) % 2 != 0) return false;
  }
  return true;
}

Eigen::MatrixXcd to_dense(const PauliHamiltonian& h, int dense_limit) {
  if (h.n_qubits() > dense_limit) {
    throw CapacityError("to_dense: " + std::to_string(h.n_qubits()) +
                        " qubits exceeds the dense limit of " + std::to_string(dense_limit) +
                        " qubits");
  }
  const std::size_t d = std::size_t{1} << h.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                              static_cast<Eigen::Index>(d));
  for (const auto& term : h.terms()) {
    const PauliTermMasks tm = term_masks(term);
    for (std::size_t j = 0; j < d; ++j) {
      const double sign = (std::popcount(j & tm.sign_mask) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(j ^ tm.flip_mask), static_cast<Eigen::Index>(j)) +=
          tm.coefficient * sign * tm.global_phase;
    }
  }
  return m;
}

}  // namespace gibbs

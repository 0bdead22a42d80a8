#include "gibbs/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gibbs/errors.hpp"

namespace gibbs {

namespace {

void check_beta(double beta) {
  if (beta < 0.0 || !std::isfinite(beta)) {
    throw std::invalid_argument("inverse temperature must be finite and >= 0, got " +
                                std::to_string(beta));
  }
}

// Eigenvalues of a real, parity-preserving operator via its two parity
// blocks; quarters the tridiagonalization work at large n.
std::vector<double> parity_block_eigenvalues(const PauliHamiltonian& h) {
  const std::size_t d = std::size_t{1} << h.n_qubits();
  std::vector<Eigen::Index> position(d);
  std::vector<std::size_t> members[2];
  for (std::size_t i = 0; i < d; ++i) {
    const int sector = std::popcount(i) & 1;
    position[i] = static_cast<Eigen::Index>(members[sector].size());
    members[sector].push_back(i);
  }

  std::vector<double> energies;
  energies.reserve(d);
  for (const auto& sector : members) {
    const Eigen::Index bd = static_cast<Eigen::Index>(sector.size());
    if (bd == 0) continue;
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(bd, bd);
    for (const auto& term : h.terms()) {
      const PauliTermMasks tm = term_masks(term);
      const double phase = tm.global_phase.real();  // +-1 for a real operator
      for (Eigen::Index col = 0; col < bd; ++col) {
        const std::size_t j = sector[static_cast<std::size_t>(col)];
        const double sign = (std::popcount(j & tm.sign_mask) & 1) ? -1.0 : 1.0;
        block(position[j ^ tm.flip_mask], col) += tm.coefficient * phase * sign;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("exact_spectrum: eigensolver failed to converge");
    }
    energies.insert(energies.end(), es.eigenvalues().data(),
                    es.eigenvalues().data() + es.eigenvalues().size());
  }
  std::sort(energies.begin(), energies.end());
  return energies;
}

}  // namespace

SpectrumResult exact_spectrum(const PauliHamiltonian& h, double beta, bool with_vectors,
                              int dense_limit) {
  check_beta(beta);
  SpectrumResult r;
  r.beta = beta;

  const bool real_matrix = is_real_in_computational_basis(h);
  if (!with_vectors && real_matrix && preserves_parity(h)) {
    if (h.n_qubits() > dense_limit) {
      throw CapacityError("exact_spectrum: " + std::to_string(h.n_qubits()) +
                          " qubits exceeds the dense limit of " + std::to_string(dense_limit) +
                          " qubits");
    }
    r.energies = parity_block_eigenvalues(h);
  } else if (real_matrix) {
    const Eigen::MatrixXd dense = to_dense(h, dense_limit).real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        dense, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("exact_spectrum: eigensolver failed to converge");
    }
    const Eigen::VectorXd ev = es.eigenvalues();
    r.energies.assign(ev.data(), ev.data() + ev.size());
    if (with_vectors) r.eigenvectors = es.eigenvectors().cast<cplx>();
  } else {
    const Eigen::MatrixXcd dense = to_dense(h, dense_limit);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        dense, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("exact_spectrum: eigensolver failed to converge");
    }
    const Eigen::VectorXd ev = es.eigenvalues();
    r.energies.assign(ev.data(), ev.data() + ev.size());
    if (with_vectors) r.eigenvectors = es.eigenvectors();
  }

  // shifted sum: Z = e^{-beta E_0} * sum_i e^{-beta (E_i - E_0)}
  const double e0 = r.energies.front();
  double shifted_sum = 0.0;
  r.boltzmann_probs.resize(r.energies.size());
  for (std::size_t i = 0; i < r.energies.size(); ++i) {
    r.boltzmann_probs[i] = std::exp(-beta * (r.energies[i] - e0));
    shifted_sum += r.boltzmann_probs[i];
  }
  for (double& p : r.boltzmann_probs) p /= shifted_sum;
  r.log_partition_function = -beta * e0 + std::log(shifted_sum);
  r.partition_function = std::exp(r.log_partition_function);
  return r;
}

DensityMatrix gibbs_state_exact(const PauliHamiltonian& h, double beta, int dense_limit) {
  const SpectrumResult s = exact_spectrum(h, beta, true, dense_limit);
  const Eigen::Index d = s.eigenvectors.rows();
  Eigen::VectorXd p(d);
  for (Eigen::Index i = 0; i < d; ++i) p(i) = s.boltzmann_probs[static_cast<std::size_t>(i)];
  Eigen::MatrixXcd rho =
      s.eigenvectors * p.asDiagonal() * s.eigenvectors.adjoint();
  return DensityMatrix(h.n_qubits(), std::move(rho));
}

StateVector tfd_state(const PauliHamiltonian& h, double beta, int dense_limit) {
  const SpectrumResult s = exact_spectrum(h, beta, true, dense_limit);
  const int n = h.n_qubits();
  const std::size_t d = std::size_t{1} << n;
  std::vector<cplx> amps(d * d, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < d; ++i) {
    const double w = std::sqrt(s.boltzmann_probs[i]);
    if (w == 0.0) continue;
    const auto v = s.eigenvectors.col(static_cast<Eigen::Index>(i));
    for (std::size_t a = 0; a < d; ++a) {
      const cplx va = v(static_cast<Eigen::Index>(a));
      if (va == cplx{0.0, 0.0}) continue;
      for (std::size_t b = 0; b < d; ++b) {
        // register A holds |E_i>, register B the conjugated eigenvector
        amps[a | (b << n)] += w * va * std::conj(v(static_cast<Eigen::Index>(b)));
      }
    }
  }
  return StateVector(2 * n, std::move(amps));
}

std::vector<double> lowest_k_boltzmann_probs(int n, double gamma, double h, double beta, int k,
                                             int dense_limit) {
  if (k < 1 || (n <= 62 && static_cast<std::size_t>(k) > (std::size_t{1} << n))) {
    throw std::invalid_argument("lowest_k_boltzmann_probs: k must be in [1, 2^n]");
  }
  const SpectrumResult s = exact_spectrum(build_xy_hamiltonian(n, gamma, h), beta,
                                          /*with_vectors=*/false, dense_limit);
  return std::vector<double>(s.boltzmann_probs.begin(), s.boltzmann_probs.begin() + k);
}

void write_spectrum_csv(std::ostream& out, const SpectrumResult& spectrum) {
  out << "index,energy,probability\n";
  char buf[128];
  for (std::size_t i = 0; i < spectrum.energies.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", i, spectrum.energies[i],
                  spectrum.boltzmann_probs[i]);
    out << buf;
  }
}

}  // namespace gibbs

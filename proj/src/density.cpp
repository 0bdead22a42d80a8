#include "gibbs/density.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gibbs {

namespace {

constexpr double kEigenClamp = 1e-12;

struct KeepMasks {
  std::vector<std::size_t> keep_bits;   // bit of each kept qubit
  std::vector<std::size_t> other_bits;  // bit of each traced-out qubit
};

KeepMasks keep_masks(int n_qubits, std::span<const int> keep) {
  if (keep.empty() || static_cast<int>(keep.size()) >= n_qubits) {
    throw std::invalid_argument("partial_trace: keep must be a nonempty proper subset");
  }
  std::vector<bool> kept(static_cast<std::size_t>(n_qubits), false);
  for (int q : keep) {
    if (q < 0 || q >= n_qubits) {
      throw std::invalid_argument("partial_trace: qubit " + std::to_string(q) + " out of range");
    }
    if (kept[static_cast<std::size_t>(q)]) {
      throw std::invalid_argument("partial_trace: duplicate qubit " + std::to_string(q));
    }
    kept[static_cast<std::size_t>(q)] = true;
  }
  KeepMasks m;
  // reduced index uses kept qubits in ascending order
  for (int q = 0; q < n_qubits; ++q) {
    (kept[static_cast<std::size_t>(q)] ? m.keep_bits : m.other_bits)
        .push_back(std::size_t{1} << q);
  }
  return m;
}

std::size_t compose(const std::vector<std::size_t>& bits, std::size_t sub_index) {
  std::size_t full = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (sub_index & (std::size_t{1} << k)) full |= bits[k];
  }
  return full;
}

}  // namespace

DensityMatrix::DensityMatrix(int n_qubits, Eigen::MatrixXcd elements)
    : n_qubits_(n_qubits), elements_(std::move(elements)) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  if (n_qubits < 1 || elements_.rows() != d || elements_.cols() != d) {
    throw std::invalid_argument("DensityMatrix: matrix must be 2^n x 2^n");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return DensityMatrix(n_qubits,
                       Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::pure(const StateVector& state) { return density_from_state(state); }

double DensityMatrix::purity() const { return (elements_ * elements_).trace().real(); }

bool DensityMatrix::is_valid(double hermitian_tol, double trace_tol, double eigen_tol) const {
  const double herm = (elements_ - elements_.adjoint()).cwiseAbs().maxCoeff();
  const double trace_err = std::abs(elements_.trace() - cplx{1.0, 0.0});
  if (herm > hermitian_tol || trace_err > trace_tol) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(elements_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -eigen_tol;
}

DensityMatrix density_from_state(const StateVector& state) {
  const Eigen::Index d = static_cast<Eigen::Index>(state.dim());
  Eigen::VectorXcd psi(d);
  for (Eigen::Index i = 0; i < d; ++i) psi(i) = state[static_cast<std::size_t>(i)];
  return DensityMatrix(state.n_qubits(), psi * psi.adjoint());
}

DensityMatrix partial_trace(const StateVector& state, std::span<const int> keep) {
  const KeepMasks m = keep_masks(state.n_qubits(), keep);
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t de = std::size_t{1} << m.other_bits.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                                static_cast<Eigen::Index>(dk));
  for (std::size_t e = 0; e < de; ++e) {
    const std::size_t env = compose(m.other_bits, e);
    for (std::size_t a = 0; a < dk; ++a) {
      const cplx va = state[compose(m.keep_bits, a) | env];
      if (va == cplx{0.0, 0.0}) continue;
      for (std::size_t b = 0; b < dk; ++b) {
        const cplx vb = state[compose(m.keep_bits, b) | env];
        out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) += va * std::conj(vb);
      }
    }
  }
  return DensityMatrix(static_cast<int>(keep.size()), std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const KeepMasks m = keep_masks(rho.n_qubits(), keep);
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t de = std::size_t{1} << m.other_bits.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                                static_cast<Eigen::Index>(dk));
  for (std::size_t a = 0; a < dk; ++a) {
    const std::size_t ia = compose(m.keep_bits, a);
    for (std::size_t b = 0; b < dk; ++b) {
      const std::size_t ib = compose(m.keep_bits, b);
      cplx sum{0.0, 0.0};
      for (std::size_t e = 0; e < de; ++e) {
        const std::size_t env = compose(m.other_bits, e);
        sum += rho.matrix()(static_cast<Eigen::Index>(ia | env),
                            static_cast<Eigen::Index>(ib | env));
      }
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sum;
    }
  }
  return DensityMatrix(static_cast<int>(keep.size()), std::move(out));
}

double entropy_of_density(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix(), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double p = ev(i);
    if (p > kEigenClamp) s -= p * std::log(p);
  }
  return s;
}

double entropy_of_probabilities(std::span<const double> p) {
  double s = 0.0;
  for (double x : p) {
    if (x > kEigenClamp) s -= x * std::log(x);
  }
  return s;
}

namespace {

double check_real(cplx value, const char* what) {
  if (std::abs(value.imag()) > 1e-10) {
    throw std::runtime_error(std::string(what) + ": imaginary residue " +
                             std::to_string(value.imag()) + " exceeds 1e-10");
  }
  return value.real();
}

}  // namespace

double expectation_value(const StateVector& state, const PauliHamiltonian& h) {
  if (h.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("expectation_value: qubit count mismatch");
  }
  const std::size_t d = state.dim();
  cplx total{0.0, 0.0};
  for (const auto& term : h.terms()) {
    const PauliTermMasks tm = term_masks(term);
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < d; ++i) {
      const double sign = (std::popcount(i & tm.sign_mask) & 1) ? -1.0 : 1.0;
      acc += std::conj(state[i ^ tm.flip_mask]) * sign * state[i];
    }
    total += tm.coefficient * tm.global_phase * acc;
  }
  return check_real(total, "expectation_value");
}

double expectation_value(const DensityMatrix& rho, const PauliHamiltonian& h) {
  if (h.n_qubits() != rho.n_qubits()) {
    throw std::invalid_argument("expectation_value: qubit count mismatch");
  }
  const std::size_t d = static_cast<std::size_t>(rho.dim());
  cplx total{0.0, 0.0};
  for (const auto& term : h.terms()) {
    const PauliTermMasks tm = term_masks(term);
    cplx acc{0.0, 0.0};
    // Tr(P rho) = sum_j phase(j) rho(j, j ^ flip)
    for (std::size_t j = 0; j < d; ++j) {
      const double sign = (std::popcount(j & tm.sign_mask) & 1) ? -1.0 : 1.0;
      acc += sign * rho.matrix()(static_cast<Eigen::Index>(j),
                                 static_cast<Eigen::Index>(j ^ tm.flip_mask));
    }
    total += tm.coefficient * tm.global_phase * acc;
  }
  return check_real(total, "expectation_value");
}

}  // namespace gibbs

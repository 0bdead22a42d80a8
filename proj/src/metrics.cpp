#include "gibbs/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gibbs {

namespace {

constexpr double kClamp = 1e-12;
constexpr double kSupportCutoff = 1e-10;

void check_dims(const DensityMatrix& a, const DensityMatrix& b, const char* what) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace

double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_dims(rho, sigma, "uhlmann_fidelity");
  // eigenvalues of rho*sigma coincide with those of the Hermitian
  // sqrt(rho) sigma sqrt(rho), so they are real and nonnegative
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(rho.matrix() * sigma.matrix(), false);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("uhlmann_fidelity: eigensolver failed");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i).real();
    if (lam > kClamp) sum += std::sqrt(lam);
  }
  return std::clamp(sum * sum, 0.0, 1.0);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_dims(rho, sigma, "trace_distance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix() - sigma.matrix(),
                                                     Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double relative_entropy(const DensityMatrix& sigma, const DensityMatrix& rho) {
  check_dims(sigma, rho, "relative_entropy");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_sigma(sigma.matrix());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_rho(rho.matrix());
  const Eigen::VectorXd ps = es_sigma.eigenvalues();
  const Eigen::VectorXd pr = es_rho.eigenvalues();

  // support check: every null direction of rho must be orthogonal to sigma
  for (Eigen::Index j = 0; j < pr.size(); ++j) {
    if (pr(j) > kSupportCutoff) continue;
    const Eigen::VectorXcd u = es_rho.eigenvectors().col(j);
    const double overlap = (u.adjoint() * sigma.matrix() * u)(0, 0).real();
    if (overlap > kSupportCutoff) {
      throw std::domain_error("relative_entropy: support of sigma not contained in rho "
                              "(relative entropy is infinite)");
    }
  }

  double tr_sigma_ln_sigma = 0.0;
  for (Eigen::Index i = 0; i < ps.size(); ++i) {
    if (ps(i) > kClamp) tr_sigma_ln_sigma += ps(i) * std::log(ps(i));
  }
  double tr_sigma_ln_rho = 0.0;
  for (Eigen::Index j = 0; j < pr.size(); ++j) {
    if (pr(j) <= kSupportCutoff) continue;
    const Eigen::VectorXcd w = es_rho.eigenvectors().col(j);
    const double weight = (w.adjoint() * sigma.matrix() * w)(0, 0).real();
    tr_sigma_ln_rho += weight * std::log(pr(j));
  }
  return std::max(0.0, tr_sigma_ln_sigma - tr_sigma_ln_rho);
}

}  // namespace gibbs

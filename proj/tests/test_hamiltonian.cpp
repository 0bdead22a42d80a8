#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "gibbs/density.hpp"
#include "gibbs/errors.hpp"
#include "gibbs/pauli.hpp"
#include "gibbs/spectrum.hpp"

using namespace gibbs;

namespace {

int count_terms(const PauliHamiltonian& h, Pauli axis, double coeff) {
  int hits = 0;
  for (const auto& t : h.terms()) {
    if (std::abs(t.coefficient - coeff) > 1e-15) continue;
    const bool all_axis = std::all_of(t.paulis.begin(), t.paulis.end(),
                                      [&](const auto& qp) { return qp.second == axis; });
    if (all_axis && !t.paulis.empty()) ++hits;
  }
  return hits;
}

}  // namespace

TEST_CASE("xy coefficients read off the definition") {
  const PauliHamiltonian h = build_xy_hamiltonian(3, 0.5, 0.5);
  CHECK(h.terms().size() == 9);
  CHECK(count_terms(h, Pauli::X, -0.75) == 3);
  CHECK(count_terms(h, Pauli::Y, -0.25) == 3);
  CHECK(count_terms(h, Pauli::Z, -0.5) == 3);
}

TEST_CASE("xy at the isotropic point") {
  const PauliHamiltonian h = build_xy_hamiltonian(4, 0.0, 0.2);
  CHECK(count_terms(h, Pauli::X, -0.5) == 4);
  CHECK(count_terms(h, Pauli::Y, -0.5) == 4);
}

TEST_CASE("xy n=2 doubles the bond") {
  // the literal periodic sum i=1..2 counts the single bond twice
  const PauliHamiltonian h = build_xy_hamiltonian(2, 1.0, 0.0);
  const Eigen::MatrixXcd dense = to_dense(h);
  Eigen::Matrix4cd expected;
  expected.setZero();
  expected(0, 3) = -2.0;
  expected(1, 2) = -2.0;
  expected(2, 1) = -2.0;
  expected(3, 0) = -2.0;
  CHECK((dense - expected).cwiseAbs().maxCoeff() < 1e-14);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense, Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues()(0) == doctest::Approx(-2.0));
  CHECK(es.eigenvalues()(1) == doctest::Approx(-2.0));
  CHECK(es.eigenvalues()(2) == doctest::Approx(2.0));
  CHECK(es.eigenvalues()(3) == doctest::Approx(2.0));
}

TEST_CASE("xy rejects n < 2") {
  CHECK_THROWS_AS(build_xy_hamiltonian(1, 0.5, 0.5), std::invalid_argument);
}

TEST_CASE("qbm hamiltonian") {
  const PauliHamiltonian single = build_qbm_hamiltonian({1.0}, {});
  const Eigen::MatrixXcd dense = to_dense(single);
  CHECK(std::abs(dense(0, 0) - cplx{-1.0, 0.0}) < 1e-15);
  CHECK(std::abs(dense(1, 1) - cplx{1.0, 0.0}) < 1e-15);

  const PauliHamiltonian pair = build_qbm_hamiltonian({0.0, 0.0}, {{0, 1, 1.0}});
  const Eigen::MatrixXcd dp = to_dense(pair);
  CHECK(dp(0, 0).real() == doctest::Approx(-1.0));
  CHECK(dp(1, 1).real() == doctest::Approx(1.0));
  CHECK(dp(2, 2).real() == doctest::Approx(1.0));
  CHECK(dp(3, 3).real() == doctest::Approx(-1.0));

  const PauliHamiltonian local = build_qbm_hamiltonian({0.3, -0.2, 0.1}, {});
  for (const auto& t : local.terms()) CHECK(t.paulis.size() == 1);

  CHECK_THROWS_AS(build_qbm_hamiltonian({1.0, 1.0}, {{1, 1, 0.5}}), std::invalid_argument);
}

TEST_CASE("to_dense basics and capacity") {
  const PauliHamiltonian z(1, {PauliTerm(1.0, {{0, Pauli::Z}})});
  const Eigen::MatrixXcd dz = to_dense(z);
  CHECK(dz(0, 0).real() == doctest::Approx(1.0));
  CHECK(dz(1, 1).real() == doctest::Approx(-1.0));

  const PauliHamiltonian xx(2, {PauliTerm(1.0, {{0, Pauli::X}, {1, Pauli::X}})});
  const Eigen::MatrixXcd dxx = to_dense(xx);
  for (int i = 0; i < 4; ++i) CHECK(dxx(i, 3 - i).real() == doctest::Approx(1.0));

  // Hermitian for a random mixed-string operator
  std::mt19937_64 rng(3);
  std::vector<PauliTerm> terms;
  for (int t = 0; t < 6; ++t) {
    std::vector<std::pair<int, Pauli>> ops;
    for (int q = 0; q < 3; ++q) {
      const auto r = rng() % 4;
      if (r < 3) ops.emplace_back(q, static_cast<Pauli>(r));
    }
    if (ops.empty()) continue;
    terms.emplace_back(std::uniform_real_distribution<double>(-1, 1)(rng), ops);
  }
  const Eigen::MatrixXcd dense = to_dense(PauliHamiltonian(3, terms));
  CHECK((dense - dense.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

  try {
    to_dense(build_xy_hamiltonian(15, 0.5, 0.5));
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("14") != std::string::npos);
  }
}

TEST_CASE("exact spectrum at beta = 0") {
  const SpectrumResult s = exact_spectrum(build_xy_hamiltonian(3, 0.3, 0.8), 0.0, false);
  CHECK(s.partition_function == doctest::Approx(8.0).epsilon(1e-12));
  for (double p : s.boltzmann_probs) CHECK(p == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("exact spectrum of the doubled-bond chain") {
  // eigenvalues {-2,-2,2,2} give Z = 2 e^{2b} + 2 e^{-2b}
  for (double beta : {0.1, 0.7, 2.0}) {
    const SpectrumResult s = exact_spectrum(build_xy_hamiltonian(2, 1.0, 0.0), beta, false);
    CHECK(s.partition_function ==
          doctest::Approx(2.0 * std::exp(2.0 * beta) + 2.0 * std::exp(-2.0 * beta))
              .epsilon(1e-12));
  }
}

TEST_CASE("dominant ground state at large beta") {
  // QBM with distinct biases has a nondegenerate ground state
  const PauliHamiltonian h = build_qbm_hamiltonian({0.7, 0.4}, {{0, 1, 0.2}});
  const SpectrumResult s = exact_spectrum(h, 50.0, false);
  CHECK(s.boltzmann_probs[0] == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("spectrum rejects negative beta") {
  CHECK_THROWS_AS(exact_spectrum(build_xy_hamiltonian(2, 0.5, 0.5), -1.0, false),
                  std::invalid_argument);
}

TEST_CASE("overflow safety at beta = 1e4") {
  for (const auto& h : {build_xy_hamiltonian(2, 1.0, 0.0), build_xy_hamiltonian(4, 0.5, 0.5),
                        build_qbm_hamiltonian({0.7, -0.4, 0.3}, {{0, 1, 1.0}, {1, 2, -0.5}})}) {
    const SpectrumResult s = exact_spectrum(h, 1e4, false);
    CHECK(std::isfinite(s.log_partition_function));
    double total = 0.0;
    for (double p : s.boltzmann_probs) {
      CHECK(std::isfinite(p));
      total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("boltzmann probabilities: normalized and nonincreasing") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    const double gamma = u(rng), field = u(rng), beta = 3.0 * u(rng) + 0.01;
    const SpectrumResult s = exact_spectrum(build_xy_hamiltonian(3, gamma, field), beta, false);
    double total = 0.0;
    for (std::size_t i = 0; i < s.boltzmann_probs.size(); ++i) {
      total += s.boltzmann_probs[i];
      if (i > 0) CHECK(s.boltzmann_probs[i] <= s.boltzmann_probs[i - 1] + 1e-15);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("gibbs state limits and the matrix-exponential oracle") {
  CHECK((gibbs_state_exact(build_xy_hamiltonian(2, 0.7, 0.3), 0.0).matrix() -
         DensityMatrix::maximally_mixed(2).matrix())
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  // nondegenerate instance: large beta approaches the ground-state projector
  const PauliHamiltonian nd = build_qbm_hamiltonian({0.7, 0.4}, {{0, 1, 0.2}});
  const SpectrumResult s = exact_spectrum(nd, 50.0);
  const Eigen::VectorXcd ground = s.eigenvectors.col(0);
  const Eigen::MatrixXcd projector = ground * ground.adjoint();
  CHECK((gibbs_state_exact(nd, 50.0).matrix() - projector).cwiseAbs().maxCoeff() < 1e-8);

  // scaling-and-squaring oracle: rho = e^{-beta H} / Tr e^{-beta H}
  for (int n : {2, 3, 4, 5, 6}) {
    const PauliHamiltonian h = build_xy_hamiltonian(n, 0.5, 0.5);
    const double beta = 1.0;
    const Eigen::MatrixXcd dense = to_dense(h);
    const Eigen::MatrixXcd expm = (-beta * dense).exp();
    const Eigen::MatrixXcd oracle = expm / expm.trace().real();
    CHECK((gibbs_state_exact(h, beta).matrix() - oracle).cwiseAbs().maxCoeff() < 1e-10);
  }

  // commutes with the Hamiltonian
  const PauliHamiltonian h3 = build_xy_hamiltonian(3, 0.5, 0.5);
  const Eigen::MatrixXcd rho = gibbs_state_exact(h3, 1.0).matrix();
  const Eigen::MatrixXcd hd = to_dense(h3);
  CHECK((rho * hd - hd * rho).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("tfd state") {
  // two-level instance by hand: H = -sz, Z = e^b + e^-b
  const PauliHamiltonian h1 = build_qbm_hamiltonian({1.0}, {});
  const StateVector tfd = tfd_state(h1, 1.0);
  const double z = std::exp(1.0) + std::exp(-1.0);
  CHECK(std::abs(tfd[0] - cplx{std::sqrt(std::exp(1.0) / z), 0.0}) < 1e-12);
  CHECK(std::abs(tfd[1]) < 1e-12);
  CHECK(std::abs(tfd[2]) < 1e-12);
  CHECK(std::abs(tfd[3] - cplx{std::sqrt(std::exp(-1.0) / z), 0.0}) < 1e-12);

  // beta = 0: maximally entangled, reduced state I/d
  const StateVector flat = tfd_state(build_xy_hamiltonian(2, 0.5, 0.5), 0.0);
  const DensityMatrix reduced = partial_trace(flat, {0, 1});
  CHECK((reduced.matrix() - DensityMatrix::maximally_mixed(2).matrix()).cwiseAbs().maxCoeff() <
        1e-12);

  // tracing out either register yields the exact Gibbs state
  for (int n : {2, 3}) {
    const PauliHamiltonian h = build_xy_hamiltonian(n, 0.5, 0.5);
    const StateVector purified = tfd_state(h, 1.0);
    CHECK(purified.norm() == doctest::Approx(1.0).epsilon(1e-12));
    std::vector<int> first(static_cast<std::size_t>(n)), second(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      first[static_cast<std::size_t>(i)] = i;
      second[static_cast<std::size_t>(i)] = n + i;
    }
    const Eigen::MatrixXcd exact = gibbs_state_exact(h, 1.0).matrix();
    CHECK((partial_trace(purified, second).matrix() - exact).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((partial_trace(purified, first).matrix() - exact).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("lowest k boltzmann probabilities") {
  const auto flat = lowest_k_boltzmann_probs(3, 0.5, 0.5, 0.0, 5);
  for (double p : flat) CHECK(p == doctest::Approx(1.0 / 8.0).epsilon(1e-12));

  // h = 1.5 puts the chain in the polarized phase with a gap of ~1
  const auto ground = lowest_k_boltzmann_probs(3, 0.4, 1.5, 60.0, 1);
  CHECK(ground[0] > 0.999);

  // against a full-spectrum sort at n = 8
  const auto probs = lowest_k_boltzmann_probs(8, 0.5, 0.5, 1.0, 51);
  const SpectrumResult s = exact_spectrum(build_xy_hamiltonian(8, 0.5, 0.5), 1.0, false);
  std::vector<double> sorted = s.boltzmann_probs;
  std::sort(sorted.rbegin(), sorted.rend());
  for (int i = 0; i < 51; ++i) {
    CHECK(probs[static_cast<std::size_t>(i)] ==
          doctest::Approx(sorted[static_cast<std::size_t>(i)]).epsilon(1e-12));
  }

  CHECK_THROWS_AS(lowest_k_boltzmann_probs(2, 0.5, 0.5, 1.0, 5), std::invalid_argument);
}

TEST_CASE("xy eigenvectors have definite parity") {
  // resolve degenerate subspaces by diagonalizing the parity operator inside
  // each energy block, then check P v = +-v
  for (int n : {3, 4, 5, 6}) {
    const PauliHamiltonian h = build_xy_hamiltonian(n, 0.5, 0.5);
    const SpectrumResult s = exact_spectrum(h, 0.0);
    const std::size_t d = std::size_t{1} << n;

    Eigen::VectorXd parity(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) {
      parity(static_cast<Eigen::Index>(i)) = (std::popcount(i) & 1) ? -1.0 : 1.0;
    }

    Eigen::MatrixXcd vectors = s.eigenvectors;
    std::size_t block_start = 0;
    while (block_start < d) {
      std::size_t block_end = block_start + 1;
      while (block_end < d &&
             std::abs(s.energies[block_end] - s.energies[block_start]) < 1e-9) {
        ++block_end;
      }
      const Eigen::Index b0 = static_cast<Eigen::Index>(block_start);
      const Eigen::Index bw = static_cast<Eigen::Index>(block_end - block_start);
      if (bw > 1) {
        const Eigen::MatrixXcd block = vectors.middleCols(b0, bw);
        const Eigen::MatrixXcd p_in_block =
            block.adjoint() * parity.asDiagonal().toDenseMatrix().cast<cplx>() * block;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(p_in_block);
        vectors.middleCols(b0, bw) = block * es.eigenvectors();
      }
      block_start = block_end;
    }

    for (std::size_t c = 0; c < d; ++c) {
      const Eigen::VectorXcd v = vectors.col(static_cast<Eigen::Index>(c));
      const Eigen::VectorXcd pv = parity.asDiagonal() * v;
      const double expectation = (v.adjoint() * pv)(0).real();  // +-1 for definite parity
      const double sign = expectation >= 0.0 ? 1.0 : -1.0;
      CHECK(std::abs(expectation - sign) < 1e-8);
      CHECK((pv - sign * v).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
}

TEST_CASE("spectrum csv export") {
  const SpectrumResult s = exact_spectrum(build_xy_hamiltonian(2, 0.5, 0.5), 1.0, false);
  std::ostringstream os;
  write_spectrum_csv(os, s);
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  CHECK(header == "index,energy,probability");
  int rows = 0;
  std::string line;
  double prob_total = 0.0;
  while (std::getline(is, line)) {
    int index;
    double energy, prob;
    CHECK(std::sscanf(line.c_str(), "%d,%lg,%lg", &index, &energy, &prob) == 3);
    CHECK(index == rows);
    prob_total += prob;
    ++rows;
  }
  CHECK(rows == 4);
  CHECK(prob_total == doctest::Approx(1.0).epsilon(1e-12));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "gibbs/ansatz.hpp"
#include "gibbs/density.hpp"
#include "gibbs/gates.hpp"
#include "gibbs/pauli.hpp"
#include "gibbs/statevector.hpp"

using namespace gibbs;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> amps(std::size_t{1} << n);
  for (auto& a : amps) a = cplx{gauss(rng), gauss(rng)};
  double norm = 0.0;
  for (const auto& a : amps) norm += std::norm(a);
  norm = std::sqrt(norm);
  for (auto& a : amps) a /= norm;
  return StateVector(n, std::move(amps));
}

// independent 4x4 oracle: dense matrix of the XY chain at n = 2 built from
// explicit Kronecker products, no PauliHamiltonian machinery involved
Eigen::Matrix4cd xy2_dense(double gamma, double h) {
  Eigen::Matrix2cd x, y, z, id;
  x << 0, 1, 1, 0;
  y << 0, cplx(0, -1), cplx(0, 1), 0;
  z << 1, 0, 0, -1;
  id.setIdentity();
  auto kron = [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
  };
  // the periodic sum at n = 2 visits the bond twice
  return -(1.0 + gamma) * kron(x, x) - (1.0 - gamma) * kron(y, y) -
         h * (kron(z, id) + kron(id, z));
}

}  // namespace

TEST_CASE("cnot truth table") {
  StateVector st(2);
  st[0] = 0.0;
  st[0b10] = 1.0;  // qubit 1 set
  apply_gate(st, gates::cnot(), {1, 0});  // control qubit 1, target qubit 0
  CHECK(std::abs(st[0b11] - cplx{1.0, 0.0}) < 1e-15);
  CHECK(st.probability(0b11) == doctest::Approx(1.0));
}

TEST_CASE("ry half rotation makes an equal superposition") {
  StateVector st(1);
  apply_gate(st, gates::ry(kPi / 2), {0});
  CHECK(std::abs(st[0] - cplx{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  CHECK(std::abs(st[1] - cplx{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
}

TEST_CASE("rp at zero angles is the identity") {
  StateVector st = random_state(2, 11);
  StateVector before = st;
  apply_gate(st, rp_matrix(0.0, 0.0), {0, 1});
  for (std::size_t i = 0; i < st.dim(); ++i) {
    CHECK(std::abs(st[i] - before[i]) < 1e-15);
  }
}

TEST_CASE("apply_gate rejects bad targets") {
  StateVector st(2);
  CHECK_THROWS_AS(apply_gate(st, gates::ry(0.3), {2}), std::invalid_argument);
  CHECK_THROWS_AS(apply_gate(st, gates::cnot(), {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(apply_gate(st, gates::cnot(), {0}), std::invalid_argument);
}

TEST_CASE("gate application preserves the norm") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  StateVector st = random_state(4, 23);
  for (int step = 0; step < 50; ++step) {
    const int q = static_cast<int>(rng() % 4);
    const int r = (q + 1 + static_cast<int>(rng() % 3)) % 4;
    switch (rng() % 4) {
      case 0: apply_gate(st, gates::ry(angle(rng)), {q}); break;
      case 1: apply_gate(st, gates::rz(angle(rng)), {q}); break;
      case 2: apply_gate(st, gates::cnot(), {q, r}); break;
      default: apply_gate(st, rp_matrix(angle(rng), angle(rng)), {q, r}); break;
    }
    CHECK(st.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("named gate constructors are unitary") {
  CHECK(gates::ry(0.7).unitarity_error() < 1e-12);
  CHECK(gates::rz(-1.3).unitarity_error() < 1e-12);
  CHECK(gates::sqrt_x().unitarity_error() < 1e-12);
  CHECK(gates::cnot().unitarity_error() < 1e-12);
  CHECK(gates::rxy(2.1).unitarity_error() < 1e-12);
  CHECK(gates::ryx(-0.4).unitarity_error() < 1e-12);
  CHECK(rp_matrix(0.9, -2.2).unitarity_error() < 1e-12);
}

TEST_CASE("sqrt_x squares to X") {
  StateVector st(1);
  apply_gate(st, gates::sqrt_x(), {0});
  apply_gate(st, gates::sqrt_x(), {0});
  CHECK(std::abs(st[1] - cplx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("density_from_state basics") {
  StateVector zero(1);
  DensityMatrix rho = density_from_state(zero);
  CHECK(std::abs(rho.matrix()(0, 0) - cplx{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(rho.matrix()(1, 1)) < 1e-15);

  StateVector plus(1);
  apply_gate(plus, gates::ry(kPi / 2), {0});
  DensityMatrix rho_plus = density_from_state(plus);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(rho_plus.matrix()(i, j) - cplx{0.5, 0.0}) < 1e-15);

  DensityMatrix rnd = density_from_state(random_state(2, 3));
  CHECK(std::abs(rnd.matrix().trace().real() - 1.0) < 1e-12);
  CHECK(rnd.purity() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rnd.is_valid());
}

TEST_CASE("partial trace of a Bell pair is maximally mixed") {
  StateVector bell(2);
  apply_gate(bell, gates::ry(kPi / 2), {0});
  apply_cnot(bell, 0, 1);
  for (int keep = 0; keep < 2; ++keep) {
    DensityMatrix reduced = partial_trace(bell, {keep});
    CHECK(std::abs(reduced.matrix()(0, 0) - cplx{0.5, 0.0}) < 1e-12);
    CHECK(std::abs(reduced.matrix()(1, 1) - cplx{0.5, 0.0}) < 1e-12);
    CHECK(std::abs(reduced.matrix()(0, 1)) < 1e-12);
  }
}

TEST_CASE("partial trace of a product state recovers the factor") {
  StateVector st(2);
  apply_gate(st, gates::ry(kPi / 2), {1});  // |0> (x) |+> with qubit 1 the second factor
  DensityMatrix reduced = partial_trace(st, {1});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(reduced.matrix()(i, j) - cplx{0.5, 0.0}) < 1e-12);
}

TEST_CASE("partial trace rejects empty and full selectors") {
  StateVector st(2);
  CHECK_THROWS_AS(partial_trace(st, std::span<const int>{}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(st, {0, 1}), std::invalid_argument);
}

TEST_CASE("pre-purification state reduces to the first-column weights") {
  // Fig.-1 structure before U_S: U_A on the ancillas, CNOT fan-out, then
  // trace out either register; oracle = squared first column of U_A alone.
  const int n = 3;
  const Circuit ua = build_ancilla_ansatz(n, 2);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  std::vector<double> theta(static_cast<std::size_t>(ua.parameter_count()));
  for (auto& t : theta) t = angle(rng);

  const std::vector<double> column = ua.simulate(theta).probabilities();

  StateVector full(2 * n);
  Circuit embedded(2 * n);
  embedded.append_embedded(ua, 0, 0);
  embedded.apply(full, theta);
  for (int i = 0; i < n; ++i) apply_cnot(full, i, n + i);

  const DensityMatrix on_system = partial_trace(full, {3, 4, 5});
  const DensityMatrix on_ancilla = partial_trace(full, {0, 1, 2});
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(on_system.matrix()(i, i).real() - column[static_cast<std::size_t>(i)]) <
          1e-12);
    for (int j = 0; j < 8; ++j) {
      // both reductions are the same diagonal matrix
      CHECK(std::abs(on_system.matrix()(i, j) - on_ancilla.matrix()(i, j)) < 1e-12);
      if (i != j) CHECK(std::abs(on_system.matrix()(i, j)) < 1e-12);
    }
  }

  CHECK(entropy_of_density(on_system) ==
        doctest::Approx(entropy_of_density(on_ancilla)).epsilon(1e-10));
}

TEST_CASE("entropy of standard states") {
  CHECK(entropy_of_density(DensityMatrix::maximally_mixed(2)) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(entropy_of_density(density_from_state(random_state(3, 17))) ==
        doctest::Approx(0.0).epsilon(1e-10));

  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
  diag(0, 0) = 0.75;
  diag(1, 1) = 0.25;
  // direct evaluation: -0.75 ln 0.75 - 0.25 ln 0.25
  CHECK(entropy_of_density(DensityMatrix(1, diag)) ==
        doctest::Approx(0.5623351446188083).epsilon(1e-12));
}

TEST_CASE("entropy of both halves of a pure bipartite state agree") {
  StateVector st = random_state(4, 5);
  const double sa = entropy_of_density(partial_trace(st, {0, 1}));
  const double sb = entropy_of_density(partial_trace(st, {2, 3}));
  CHECK(sa == doctest::Approx(sb).epsilon(1e-10));
}

TEST_CASE("expectation values") {
  StateVector zero(1);
  PauliHamiltonian z(1, {PauliTerm(1.0, {{0, Pauli::Z}})});
  CHECK(expectation_value(zero, z) == doctest::Approx(1.0));

  // Pauli strings are traceless, so Tr(H I/d) = 0
  PauliHamiltonian h = build_xy_hamiltonian(3, 0.4, 0.7);
  CHECK(expectation_value(DensityMatrix::maximally_mixed(3), h) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // XY n=2 against the dense 4x4 brute-force contraction; the oracle's first
  // kron factor is qubit 1, matching index = q0 + 2 q1
  PauliHamiltonian xy = build_xy_hamiltonian(2, 1.0, 0.0);
  StateVector st = random_state(2, 31);
  Eigen::Vector4cd psi;
  for (int i = 0; i < 4; ++i) psi(i) = st[static_cast<std::size_t>(i)];
  const double oracle = (psi.adjoint() * xy2_dense(1.0, 0.0) * psi)(0).real();
  CHECK(expectation_value(st, xy) == doctest::Approx(oracle).epsilon(1e-10));

  CHECK(expectation_value(StateVector(2), xy) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(expectation_value(StateVector(3), xy), std::invalid_argument);
}

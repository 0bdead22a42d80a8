#pragma once

#include "gibbs/density.hpp"

namespace gibbs {

// Uhlmann-Josza fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, computed as
// (sum_i sqrt(lambda_i))^2 over the eigenvalues of rho * sigma with small
// negatives clamped. Symmetric in its arguments; value in [0, 1].
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// 1/2 sum |eigenvalues of rho - sigma|.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Quantum relative entropy S(sigma || rho) = Tr sigma ln sigma - Tr sigma ln rho
// in nats. Throws std::domain_error (infinite relative entropy) when the
// support of sigma is not contained in the support of rho.
double relative_entropy(const DensityMatrix& sigma, const DensityMatrix& rho);

}  // namespace gibbs

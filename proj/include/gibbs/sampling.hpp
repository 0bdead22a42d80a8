#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gibbs {

// Multinomial draw of n_shots outcomes from the distribution p, returned as
// per-outcome counts. Deterministic for a given seed. Throws
// std::invalid_argument unless p is a probability vector (entries >= 0,
// sum within 1e-9 of 1) and n_shots >= 1.
std::vector<std::uint64_t> sample_counts(std::span<const double> p, std::uint64_t n_shots,
                                         std::uint64_t seed);

// Plug-in entropy estimator -sum (c_i/N) ln(c_i/N) in nats; zero counts
// contribute nothing. counts must sum to n_shots >= 1.
double entropy_from_counts(std::span<const std::uint64_t> counts, std::uint64_t n_shots);

}  // namespace gibbs

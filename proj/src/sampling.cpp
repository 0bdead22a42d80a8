#include "gibbs/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace gibbs {

std::vector<std::uint64_t> sample_counts(std::span<const double> p, std::uint64_t n_shots,
                                         std::uint64_t seed) {
  if (p.empty() || n_shots < 1) {
    throw std::invalid_argument("sample_counts: need a distribution and n_shots >= 1");
  }
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw std::invalid_argument("sample_counts: probabilities must be finite and >= 0");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("sample_counts: probabilities must sum to 1");
  }

  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;

  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<std::uint64_t> counts(p.size(), 0);
  for (std::uint64_t s = 0; s < n_shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t idx = std::min(static_cast<std::size_t>(it - cdf.begin()), p.size() - 1);
    ++counts[idx];
  }
  return counts;
}

double entropy_from_counts(std::span<const std::uint64_t> counts, std::uint64_t n_shots) {
  if (n_shots < 1) throw std::invalid_argument("entropy_from_counts: n_shots must be >= 1");
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total != n_shots) {
    throw std::invalid_argument("entropy_from_counts: counts must sum to n_shots");
  }
  double s = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double f = static_cast<double>(c) / static_cast<double>(n_shots);
    s -= f * std::log(f);
  }
  return s;
}

}  // namespace gibbs

#include "gibbs/shotscale.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gibbs/spectrum.hpp"

namespace gibbs {

double coefficient_of_variation(double p, std::uint64_t n_shots) {
  if (n_shots < 1) throw std::invalid_argument("coefficient_of_variation: n_shots must be >= 1");
  if (!(p > 0.0) || p > 1.0) {
    if (p == 0.0) {
      throw std::domain_error("coefficient_of_variation: p = 0 has infinite c_v");
    }
    throw std::invalid_argument("coefficient_of_variation: p must lie in (0, 1]");
  }
  return std::sqrt((1.0 - p) / (static_cast<double>(n_shots) * p));
}

namespace {

// ln(Z / e^{-beta E_i}) = ln sum_j e^{-beta (E_j - E_i)}, evaluated with the
// ground-energy shift; always >= 0.
double log_weight_ratio(const std::vector<double>& energies, double beta, std::size_t i) {
  const double e0 = energies.front();
  double shifted_sum = 0.0;
  for (double e : energies) shifted_sum += std::exp(-beta * (e - e0));
  return beta * (energies[i] - e0) + std::log(shifted_sum);
}

// sqrt(e^r - 1) without overflow for large r.
double sqrt_expm1(double r) {
  if (r > 36.0) {
    return std::exp(r / 2.0) * std::sqrt(1.0 - std::exp(-r));
  }
  return std::sqrt(std::expm1(r));
}

std::vector<CvRecord> records_from_energies(const std::vector<double>& energies, int n,
                                            double beta, int k, std::uint64_t n_shots) {
  const double e0 = energies.front();
  double shifted_sum = 0.0;
  for (double e : energies) shifted_sum += std::exp(-beta * (e - e0));
  std::vector<CvRecord> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    CvRecord rec;
    rec.n = n;
    rec.beta = beta;
    rec.state_index = i;
    rec.p = std::exp(-beta * (energies[static_cast<std::size_t>(i)] - e0)) / shifted_sum;
    rec.normalized_cv =
        sqrt_expm1(log_weight_ratio(energies, beta, static_cast<std::size_t>(i)));
    rec.cv = rec.normalized_cv / std::sqrt(static_cast<double>(n_shots));
    out.push_back(rec);
  }
  return out;
}

}  // namespace

std::vector<CvRecord> normalized_cv_table(double gamma, double h, double beta,
                                          std::span<const int> n_range, int k,
                                          std::uint64_t n_shots, int dense_limit) {
  if (n_range.empty()) throw std::invalid_argument("normalized_cv_table: empty n range");
  if (n_shots < 1) throw std::invalid_argument("normalized_cv_table: n_shots must be >= 1");
  std::vector<CvRecord> out;
  for (int n : n_range) {
    if (k < 1 || (n < 63 && static_cast<std::uint64_t>(k) > (std::uint64_t{1} << n))) {
      throw std::invalid_argument("normalized_cv_table: k must be in [1, 2^n] for n = " +
                                  std::to_string(n));
    }
    const SpectrumResult s =
        exact_spectrum(build_xy_hamiltonian(n, gamma, h), beta, /*with_vectors=*/false,
                       dense_limit);
    const auto recs = records_from_energies(s.energies, n, beta, k, n_shots);
    out.insert(out.end(), recs.begin(), recs.end());
  }
  return out;
}

PowerLawFit fit_power_law(std::span<const CvRecord> records) {
  if (records.size() < 3) {
    throw std::invalid_argument("fit_power_law: need at least 3 records");
  }
  PowerLawFit fit;
  fit.state_index = records.front().state_index;
  fit.n_min = records.front().n;
  fit.n_max = records.front().n;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double m = static_cast<double>(records.size());
  for (const CvRecord& r : records) {
    if (r.state_index != fit.state_index) {
      throw std::invalid_argument("fit_power_law: records must share one state index");
    }
    if (!(r.normalized_cv > 0.0) || !std::isfinite(r.normalized_cv)) {
      throw std::invalid_argument("fit_power_law: normalized_cv must be positive and finite");
    }
    fit.n_min = std::min(fit.n_min, r.n);
    fit.n_max = std::max(fit.n_max, r.n);
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(r.normalized_cv);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = m * sxx - sx * sx;
  if (std::abs(denom) < 1e-30) {
    throw std::invalid_argument("fit_power_law: records need at least two distinct n");
  }
  fit.alpha = (m * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.alpha * sx) / m;
  fit.prefactor = std::exp(intercept);

  const double mean_y = sy / m;
  double ss_res = 0.0, ss_tot = 0.0;
  for (const CvRecord& r : records) {
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(r.normalized_cv);
    const double yhat = intercept + fit.alpha * x;
    ss_res += (y - yhat) * (y - yhat);
    ss_tot += (y - mean_y) * (y - mean_y);
  }
  fit.r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

std::vector<AlphaSweepRow> alpha_sweep(std::span<const double> gammas, double h,
                                       std::span<const double> betas,
                                       std::span<const int> n_range, int k, int dense_limit) {
  if (gammas.empty() || betas.empty() || n_range.empty()) {
    throw std::invalid_argument("alpha_sweep: empty grid");
  }
  std::vector<AlphaSweepRow> rows;
  for (double gamma : gammas) {
    // one eigendecomposition per (gamma, n), shared across the beta grid
    std::map<int, std::vector<double>> energies;
    for (int n : n_range) {
      energies[n] = exact_spectrum(build_xy_hamiltonian(n, gamma, h), 0.0,
                                   /*with_vectors=*/false, dense_limit)
                        .energies;
    }
    for (double beta : betas) {
      std::vector<std::vector<CvRecord>> per_state(static_cast<std::size_t>(k));
      for (int n : n_range) {
        const auto recs = records_from_energies(energies[n], n, beta, k, 1);
        for (int i = 0; i < k; ++i) {
          per_state[static_cast<std::size_t>(i)].push_back(recs[static_cast<std::size_t>(i)]);
        }
      }
      for (int i = 0; i < k; ++i) {
        AlphaSweepRow row;
        row.gamma = gamma;
        row.beta = beta;
        row.fit = fit_power_law(per_state[static_cast<std::size_t>(i)]);
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_alpha_sweep_csv(std::ostream& out, std::span<const AlphaSweepRow> rows) {
  out << "gamma,beta,i,alpha_i,C,r_squared,n_min,n_max\n";
  char buf[256];
  for (const AlphaSweepRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%d,%.17g,%.17g,%.17g,%d,%d\n", r.gamma, r.beta,
                  r.fit.state_index, r.fit.alpha, r.fit.prefactor, r.fit.r_squared, r.fit.n_min,
                  r.fit.n_max);
    out << buf;
  }
}

}  // namespace gibbs

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "gibbs/pauli.hpp"

namespace gibbs {

// Shot-noise figures for one Boltzmann probability of one system size.
struct CvRecord {
  int n = 0;
  double beta = 0.0;
  int state_index = 0;   // rank in ascending energy order
  double p = 0.0;        // Boltzmann probability
  double cv = 0.0;       // coefficient of variation at the table's n_shots
  double normalized_cv = 0.0;  // cv * sqrt(N_s) = sqrt(Z / e^{-beta E_i} - 1), N_s-free
};

// Least-squares power law normalized_cv = C * n^alpha in log-log space.
struct PowerLawFit {
  int state_index = 0;
  double alpha = 0.0;
  double prefactor = 0.0;  // C
  double r_squared = 0.0;
  int n_min = 0;
  int n_max = 0;
};

// c_v = sqrt((1 - p) / (N_s p)). Throws std::domain_error at p = 0 (infinite)
// and std::invalid_argument outside (0, 1] or for n_shots < 1.
double coefficient_of_variation(double p, std::uint64_t n_shots);

// Records for the k lowest-energy states of the XY chain at each n in
// n_range. normalized_cv is evaluated from the spectrum in log space, so it
// is exact at beta = 0 and overflow-safe at large beta.
std::vector<CvRecord> normalized_cv_table(double gamma, double h, double beta,
                                          std::span<const int> n_range, int k = 51,
                                          std::uint64_t n_shots = 1,
                                          int dense_limit = kDefaultDenseLimit);

// OLS fit of ln(normalized_cv) against ln(n); records must share a state
// index, have at least 3 points and strictly positive values.
PowerLawFit fit_power_law(std::span<const CvRecord> records);

struct AlphaSweepRow {
  double gamma = 0.0;
  double beta = 0.0;
  PowerLawFit fit;
};

// Power-law exponents alpha_i for every (gamma, beta, state index i < k),
// fitted across n_range. Spectra are computed once per (gamma, n).
std::vector<AlphaSweepRow> alpha_sweep(std::span<const double> gammas, double h,
                                       std::span<const double> betas,
                                       std::span<const int> n_range, int k = 51,
                                       int dense_limit = kDefaultDenseLimit);

// CSV with columns gamma,beta,i,alpha_i,C,r_squared,n_min,n_max.
void write_alpha_sweep_csv(std::ostream& out, std::span<const AlphaSweepRow> rows);

}  // namespace gibbs

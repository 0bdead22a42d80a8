#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gibbs {

// Configuration of one preparation job. layers_a/layers_s = -1 selects the
// benchmark default n - 1.
struct RunConfig {
  int n = 2;
  double beta = 1.0;
  double gamma = 0.5;
  double h = 0.5;
  int layers_a = -1;
  int layers_s = -1;
  int runs = 10;
  std::uint64_t seed = 0;
  std::string output;
  std::string mode = "statevector";  // or "sampled"
  std::uint64_t n_shots = 100000;    // sampled mode only
  std::string trace_dir;             // per-run convergence CSVs when nonempty

  int resolved_layers_a() const { return layers_a < 0 ? n - 1 : layers_a; }
  int resolved_layers_s() const { return layers_s < 0 ? n - 1 : layers_s; }
  void validate() const;  // throws std::invalid_argument
};

// Runs the multistart preparation and writes the result JSON.
void cmd_prepare(const RunConfig& config);

struct SweepConfig {
  std::vector<int> n_list;
  std::vector<double> beta_list;
  std::vector<double> gamma_list;
  double h = 0.5;
  int layers_a = -1;  // -1: n - 1 per grid point
  int layers_s = -1;
  int runs = 10;
  std::uint64_t seed = 0;
  std::string output;
  int jobs = 1;
  void validate() const;
};

// One CSV row per (n, gamma, beta) grid point, written in grid order.
void cmd_sweep(const SweepConfig& config);

struct TfdConfig {
  std::string params_path;  // JSON produced by cmd_prepare
  std::string output;
};

// Rebuilds the purification circuit from a prepare result and reports the
// fidelities of both reduced states.
void cmd_tfd(const TfdConfig& config);

struct ShotsConfig {
  std::vector<double> gamma_list{0.1, 0.5, 0.9};
  double h = 0.5;
  std::vector<double> beta_list{0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
  int n_min = 8;
  int n_max = 12;
  int k = 51;
  std::string output;
  std::string spectra_dir;  // per-(gamma, n, beta) spectrum CSVs when nonempty
  void validate() const;
};

void cmd_shots(const ShotsConfig& config);

struct ResourcesConfig {
  int n = 4;
  int layers_a = -1;
  int layers_s = -1;
  std::string output;  // JSON file; empty = text report on stdout only
};

// Prints formula values and the built-circuit census side by side.
// Returns a nonzero exit code if they disagree for n > 2.
int cmd_resources(const ResourcesConfig& config);

// splitmix64, used to derive per-grid-point seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace gibbs

// Command-line front end: prepare, sweep, tfd, shots, resources.
//
// Exit codes: 0 success, 2 usage error, 3 input error, 4 capacity error,
// 5 internal invariant failure.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "gibbs/commands.hpp"
#include "gibbs/errors.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitCapacity = 4;
constexpr int kExitInternal = 5;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational Gibbs state preparation toolkit for XY spin chains"};
  app.require_subcommand(1);
  // --h is the transverse-field flag, so the short help alias is disabled
  app.set_help_flag("--help", "print help and exit");
  auto add_cmd = [&](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help and exit");
    return sub;
  };

  gibbs::RunConfig prepare_cfg;
  auto* prepare = add_cmd("prepare", "Prepare one Gibbs state and write a JSON report");
  prepare->add_option("--n", prepare_cfg.n, "system qubits")->required();
  prepare->add_option("--beta", prepare_cfg.beta, "inverse temperature (0 = entropy max)")
      ->required();
  prepare->add_option("--gamma", prepare_cfg.gamma, "XY anisotropy")->capture_default_str();
  prepare->add_option("--h", prepare_cfg.h, "transverse field")->capture_default_str();
  prepare->add_option("--layers-a", prepare_cfg.layers_a, "ancilla layers (default n-1)");
  prepare->add_option("--layers-s", prepare_cfg.layers_s, "system layers (default n-1)");
  prepare->add_option("--runs", prepare_cfg.runs, "multistart runs")->capture_default_str();
  prepare->add_option("--seed", prepare_cfg.seed, "RNG seed (required; no wall-clock seeding)")
      ->required();
  prepare->add_option("--mode", prepare_cfg.mode, "statevector | sampled")
      ->capture_default_str();
  prepare->add_option("--shots", prepare_cfg.n_shots, "shots for sampled mode")
      ->capture_default_str();
  prepare->add_option("--output", prepare_cfg.output, "output JSON path")->required();
  prepare->add_option("--trace-dir", prepare_cfg.trace_dir,
                      "write per-run convergence CSVs into this directory");

  gibbs::SweepConfig sweep_cfg;
  auto* sweep = add_cmd("sweep", "Grid of preparations, one CSV row per point");
  sweep->add_option("--n-list", sweep_cfg.n_list, "system sizes")->required()->delimiter(',');
  sweep->add_option("--beta-list", sweep_cfg.beta_list, "inverse temperatures")
      ->required()
      ->delimiter(',');
  sweep->add_option("--gamma-list", sweep_cfg.gamma_list, "anisotropies")
      ->required()
      ->delimiter(',');
  sweep->add_option("--h", sweep_cfg.h, "transverse field")->capture_default_str();
  sweep->add_option("--layers-a", sweep_cfg.layers_a, "ancilla layers (default n-1)");
  sweep->add_option("--layers-s", sweep_cfg.layers_s, "system layers (default n-1)");
  sweep->add_option("--runs", sweep_cfg.runs, "multistart runs per point")->capture_default_str();
  sweep->add_option("--seed", sweep_cfg.seed, "base RNG seed")->required();
  sweep->add_option("--jobs", sweep_cfg.jobs, "concurrent grid points")->capture_default_str();
  sweep->add_option("--output", sweep_cfg.output, "output CSV path")->required();

  gibbs::TfdConfig tfd_cfg;
  auto* tfd = add_cmd("tfd", "Build the purification circuit from a prepare result");
  tfd->add_option("--params", tfd_cfg.params_path, "prepare JSON with optimal parameters")
      ->required();
  tfd->add_option("--output", tfd_cfg.output, "output JSON path")->required();

  gibbs::ShotsConfig shots_cfg;
  auto* shots = add_cmd("shots", "Shot-noise power-law exponents across system sizes");
  shots->add_option("--gamma-list", shots_cfg.gamma_list, "anisotropies")
      ->capture_default_str()
      ->delimiter(',');
  shots->add_option("--beta-list", shots_cfg.beta_list, "inverse temperatures")
      ->capture_default_str()
      ->delimiter(',');
  shots->add_option("--h", shots_cfg.h, "transverse field")->capture_default_str();
  shots->add_option("--n-min", shots_cfg.n_min, "smallest system size")->capture_default_str();
  shots->add_option("--n-max", shots_cfg.n_max, "largest system size")->capture_default_str();
  shots->add_option("--k", shots_cfg.k, "number of lowest-energy states")->capture_default_str();
  shots->add_option("--output", shots_cfg.output, "output CSV path")->required();
  shots->add_option("--dump-spectra", shots_cfg.spectra_dir,
                    "also write per-(gamma,n,beta) spectrum CSVs into this directory");

  gibbs::ResourcesConfig res_cfg;
  auto* resources = add_cmd("resources", "Formula vs census resource accounting");
  resources->add_option("--n", res_cfg.n, "system qubits")->required();
  resources->add_option("--layers-a", res_cfg.layers_a, "ancilla layers (default n-1)");
  resources->add_option("--layers-s", res_cfg.layers_s, "system layers (default n-1)");
  resources->add_option("--output", res_cfg.output, "optional JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (prepare->parsed()) {
      gibbs::cmd_prepare(prepare_cfg);
    } else if (sweep->parsed()) {
      gibbs::cmd_sweep(sweep_cfg);
    } else if (tfd->parsed()) {
      gibbs::cmd_tfd(tfd_cfg);
    } else if (shots->parsed()) {
      gibbs::cmd_shots(shots_cfg);
    } else if (resources->parsed()) {
      return gibbs::cmd_resources(res_cfg);
    }
  } catch (const gibbs::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const gibbs::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}

#include "gibbs/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "gibbs/ansatz.hpp"
#include "gibbs/errors.hpp"
#include "gibbs/jsonio.hpp"
#include "gibbs/metrics.hpp"
#include "gibbs/multistart.hpp"
#include "gibbs/objective.hpp"
#include "gibbs/sampling.hpp"
#include "gibbs/shotscale.hpp"
#include "gibbs/spectrum.hpp"

namespace gibbs {

namespace {

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::ofstream open_output(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("output path is required");
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot open output file: " + path);
  return out;
}

FreeEnergyObjective make_objective(const PauliHamiltonian& h, double beta, int layers_a,
                                   int layers_s) {
  // beta = 0 ("infinite temperature") maps to pure entropy maximization
  if (beta == 0.0) {
    return FreeEnergyObjective::infinite_temperature(h, layers_a, layers_s);
  }
  return FreeEnergyObjective(h, beta, layers_a, layers_s);
}

double exact_objective_value(const PauliHamiltonian& h, double beta, int dense_limit) {
  if (beta == 0.0) {
    // optimum of -S is -n ln 2
    return -static_cast<double>(h.n_qubits()) * std::log(2.0);
  }
  return exact_spectrum(h, beta, /*with_vectors=*/false, dense_limit).free_energy();
}

void write_cost_fields(JsonWriter& w, const CostBreakdown& c) {
  w.key_value("free_energy", c.free_energy);
  w.key_value("energy_term", c.energy_term);
  w.key_value("entropy_term", c.entropy_term);
}

void write_trace_csv(const std::string& dir, int run_index,
                     const std::vector<TracePoint>& trace) {
  const std::filesystem::path path =
      std::filesystem::path(dir) / ("run_" + std::to_string(run_index) + ".csv");
  std::filesystem::create_directories(dir);
  std::ofstream out(path);
  if (!out) throw InputError("cannot open trace file: " + path.string());
  out << "iteration,cost,gradient_norm\n";
  for (const TracePoint& t : trace) {
    out << t.iteration << "," << format_double(t.cost) << "," << format_double(t.gradient_norm)
        << "\n";
  }
}

struct SweepRow {
  int n = 0;
  double beta = 0.0, gamma = 0.0, h = 0.0;
  double best_fidelity = 0.0, best_free_energy = 0.0, exact_free_energy = 0.0;
  int iterations = 0;
};

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void RunConfig::validate() const {
  if (n < 2) throw std::invalid_argument("config: n must be >= 2");
  if (n > kDefaultDenseLimit) {
    throw CapacityError("config: n = " + std::to_string(n) + " exceeds the dense limit of " +
                        std::to_string(kDefaultDenseLimit));
  }
  if (beta < 0.0 || !std::isfinite(beta)) {
    throw std::invalid_argument("config: beta must be finite and >= 0");
  }
  if (runs < 1) throw std::invalid_argument("config: runs must be >= 1");
  if (layers_a < -1 || layers_s < -1) {
    throw std::invalid_argument("config: layer counts must be >= 0 (or -1 for the default)");
  }
  if (mode != "statevector" && mode != "sampled") {
    throw std::invalid_argument("config: mode must be statevector or sampled");
  }
  if (mode == "sampled" && n_shots < 1) {
    throw std::invalid_argument("config: sampled mode needs n_shots >= 1");
  }
  if (output.empty()) throw std::invalid_argument("config: output path is required");
}

void cmd_prepare(const RunConfig& config) {
  config.validate();
  const PauliHamiltonian h = build_xy_hamiltonian(config.n, config.gamma, config.h);
  const FreeEnergyObjective objective =
      make_objective(h, config.beta, config.resolved_layers_a(), config.resolved_layers_s());

  MultistartOptions opts;
  opts.runs = config.runs;
  opts.seed = config.seed;
  opts.bfgs.record_trace = !config.trace_dir.empty();
  const MultistartResult result = multistart_optimize(objective, opts);

  if (!config.trace_dir.empty()) {
    for (const OptimizationRun& run : result.runs) {
      write_trace_csv(config.trace_dir, run.run_index, run.trace);
    }
  }

  const OptimizationRun& best = result.runs[static_cast<std::size_t>(result.best_index)];
  const DensityMatrix prepared = objective.reduced_system_state(best.final_parameters);
  const DensityMatrix exact = config.beta == 0.0
                                  ? DensityMatrix::maximally_mixed(config.n)
                                  : gibbs_state_exact(h, config.beta);
  const double fidelity = uhlmann_fidelity(prepared, exact);
  const double tdist = trace_distance(prepared, exact);
  double rel_entropy = std::numeric_limits<double>::quiet_NaN();
  try {
    rel_entropy = relative_entropy(prepared, exact);
  } catch (const std::domain_error&) {
    // support mismatch: relative entropy is infinite, reported as null
  }

  std::ofstream out = open_output(config.output);
  JsonWriter w(out);
  w.begin_object();
  w.key_value("schema_version", 1);
  w.key_value("command", "prepare");
  w.key("config");
  w.begin_object();
  w.key_value("n", config.n);
  w.key_value("beta", config.beta);
  w.key_value("gamma", config.gamma);
  w.key_value("h", config.h);
  w.key_value("layers_a", config.resolved_layers_a());
  w.key_value("layers_s", config.resolved_layers_s());
  w.key_value("runs", config.runs);
  w.key_value("seed", config.seed);
  w.key_value("mode", config.mode);
  if (config.mode == "sampled") w.key_value("n_shots", config.n_shots);
  w.key_value("objective", config.beta == 0.0 ? "entropy_max" : "free_energy");
  w.end_object();
  w.key_value("parameter_count", objective.parameter_count());
  w.key_value("theta_count", objective.theta_count());

  w.key("runs");
  w.begin_array();
  for (const OptimizationRun& run : result.runs) {
    w.begin_object();
    w.key_value("run_index", run.run_index);
    w.key_value("converged", run.converged);
    w.key_value("iterations", run.iterations);
    w.key_value("gradient_evaluations", run.gradient_evaluations);
    write_cost_fields(w, run.final_cost);
    w.key_value("fidelity", run.fidelity);
    w.array_of("initial_parameters", run.initial_parameters);
    w.array_of("final_parameters", run.final_parameters);
    w.end_object();
  }
  w.end_array();

  w.key_value("best_index", result.best_index);
  w.key_value("best_fidelity_index", result.best_fidelity_index);
  w.key("best");
  w.begin_object();
  write_cost_fields(w, best.final_cost);
  w.key_value("fidelity", fidelity);
  w.key_value("trace_distance", tdist);
  w.key_value("relative_entropy", rel_entropy);
  w.array_of("parameters", best.final_parameters);
  w.array_of("ancilla_probabilities", best.final_cost.probabilities);
  w.end_object();

  w.key("exact");
  w.begin_object();
  w.key_value("free_energy", exact_objective_value(h, config.beta, kDefaultDenseLimit));
  if (config.beta > 0.0) {
    w.key_value("log_partition_function",
                exact_spectrum(h, config.beta, false).log_partition_function);
  }
  w.end_object();

  if (config.mode == "sampled") {
    const std::uint64_t sample_seed = mix_seed(config.seed, 1000003);
    const auto counts =
        sample_counts(best.final_cost.probabilities, config.n_shots, sample_seed);
    w.key("sampled");
    w.begin_object();
    w.key_value("n_shots", config.n_shots);
    w.key_value("seed", sample_seed);
    w.key("counts");
    w.begin_array();
    for (auto c : counts) w.value(c);
    w.end_array();
    w.key_value("entropy_estimate", entropy_from_counts(counts, config.n_shots));
    w.end_object();
  }

  w.key_value("generated_at", timestamp_utc());
  w.end_object();
  out << "\n";
}

void SweepConfig::validate() const {
  if (n_list.empty()) throw std::invalid_argument("sweep: n list must not be empty");
  if (beta_list.empty()) throw std::invalid_argument("sweep: beta list must not be empty");
  if (gamma_list.empty()) throw std::invalid_argument("sweep: gamma list must not be empty");
  for (int n : n_list) {
    if (n < 2) throw std::invalid_argument("sweep: n must be >= 2");
  }
  for (double b : beta_list) {
    if (b < 0.0 || !std::isfinite(b)) throw std::invalid_argument("sweep: invalid beta");
  }
  if (runs < 1) throw std::invalid_argument("sweep: runs must be >= 1");
  if (jobs < 1) throw std::invalid_argument("sweep: jobs must be >= 1");
  if (output.empty()) throw std::invalid_argument("sweep: output path is required");
}

void cmd_sweep(const SweepConfig& config) {
  config.validate();

  struct Point {
    int n;
    double gamma, beta;
  };
  std::vector<Point> points;
  for (int n : config.n_list) {
    for (double gamma : config.gamma_list) {
      for (double beta : config.beta_list) {
        points.push_back(Point{n, gamma, beta});
      }
    }
  }

  std::vector<SweepRow> rows(points.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;

  auto worker = [&]() {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) break;
      try {
        const Point& pt = points[i];
        const PauliHamiltonian h = build_xy_hamiltonian(pt.n, pt.gamma, config.h);
        const int la = config.layers_a < 0 ? pt.n - 1 : config.layers_a;
        const int ls = config.layers_s < 0 ? pt.n - 1 : config.layers_s;
        const FreeEnergyObjective objective = make_objective(h, pt.beta, la, ls);
        MultistartOptions opts;
        opts.runs = config.runs;
        opts.seed = mix_seed(config.seed, i);
        const MultistartResult result = multistart_optimize(objective, opts);
        const OptimizationRun& best = result.runs[static_cast<std::size_t>(result.best_index)];
        SweepRow row;
        row.n = pt.n;
        row.beta = pt.beta;
        row.gamma = pt.gamma;
        row.h = config.h;
        row.best_fidelity = result.best_fidelity;
        row.best_free_energy = best.final_cost.free_energy;
        row.exact_free_energy = exact_objective_value(h, pt.beta, kDefaultDenseLimit);
        row.iterations = best.iterations;
        rows[i] = row;
      } catch (const std::exception& e) {
        std::scoped_lock lock(error_mutex);
        failed = true;
        if (error_message.empty()) error_message = e.what();
      }
    }
  };

  const int jobs = std::min<int>(config.jobs, static_cast<int>(points.size()));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed) throw std::runtime_error("sweep: " + error_message);

  std::ofstream out = open_output(config.output);
  out << "n,beta,gamma,h,best_fidelity,best_free_energy,exact_free_energy,iterations\n";
  for (const SweepRow& r : rows) {
    out << r.n << "," << format_double(r.beta) << "," << format_double(r.gamma) << ","
        << format_double(r.h) << "," << format_double(r.best_fidelity) << ","
        << format_double(r.best_free_energy) << "," << format_double(r.exact_free_energy) << ","
        << r.iterations << "\n";
  }
}

void cmd_tfd(const TfdConfig& config) {
  if (config.params_path.empty()) throw std::invalid_argument("tfd: parameter file is required");
  if (config.output.empty()) throw std::invalid_argument("tfd: output path is required");

  std::ifstream in(config.params_path);
  if (!in) throw InputError("cannot open parameter file: " + config.params_path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse parameter file: " + std::string(e.what()));
  }

  int n = 0, layers_a = 0, layers_s = 0;
  double beta = 0.0, gamma = 0.0, field = 0.0;
  std::vector<double> params;
  try {
    const auto& cfg = doc.at("config");
    n = cfg.at("n").get<int>();
    beta = cfg.at("beta").get<double>();
    gamma = cfg.at("gamma").get<double>();
    field = cfg.at("h").get<double>();
    layers_a = cfg.at("layers_a").get<int>();
    layers_s = cfg.at("layers_s").get<int>();
    params = doc.at("best").at("parameters").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError("parameter file is missing fields: " + std::string(e.what()));
  }

  const Circuit tfd = build_tfd_circuit(n, layers_a, layers_s);
  if (static_cast<int>(params.size()) != tfd.parameter_count()) {
    throw InputError("parameter file has " + std::to_string(params.size()) +
                     " parameters but the circuit needs " +
                     std::to_string(tfd.parameter_count()));
  }

  const StateVector state = tfd.simulate(params);
  std::vector<int> keep_a(static_cast<std::size_t>(n)), keep_s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    keep_a[static_cast<std::size_t>(i)] = i;
    keep_s[static_cast<std::size_t>(i)] = n + i;
  }
  const DensityMatrix reduced_a = partial_trace(state, keep_a);
  const DensityMatrix reduced_s = partial_trace(state, keep_s);

  const PauliHamiltonian h = build_xy_hamiltonian(n, gamma, field);
  const DensityMatrix exact =
      beta == 0.0 ? DensityMatrix::maximally_mixed(n) : gibbs_state_exact(h, beta);

  std::ofstream out = open_output(config.output);
  JsonWriter w(out);
  w.begin_object();
  w.key_value("schema_version", 1);
  w.key_value("command", "tfd");
  w.key_value("source", config.params_path);
  w.key("config");
  w.begin_object();
  w.key_value("n", n);
  w.key_value("beta", beta);
  w.key_value("gamma", gamma);
  w.key_value("h", field);
  w.key_value("layers_a", layers_a);
  w.key_value("layers_s", layers_s);
  w.end_object();
  w.key_value("fidelity_reduced_a_vs_exact", uhlmann_fidelity(reduced_a, exact));
  w.key_value("fidelity_reduced_s_vs_exact", uhlmann_fidelity(reduced_s, exact));
  w.key_value("mutual_fidelity", uhlmann_fidelity(reduced_a, reduced_s));
  w.key_value("mutual_trace_distance", trace_distance(reduced_a, reduced_s));
  w.array_of("parameters", params);
  w.key_value("generated_at", timestamp_utc());
  w.end_object();
  out << "\n";
}

void ShotsConfig::validate() const {
  if (gamma_list.empty() || beta_list.empty()) {
    throw std::invalid_argument("shots: gamma and beta lists must not be empty");
  }
  if (n_min < 2 || n_max < n_min) throw std::invalid_argument("shots: invalid n range");
  if (n_max > kDefaultDenseLimit) {
    throw CapacityError("shots: n_max = " + std::to_string(n_max) +
                        " exceeds the dense limit of " + std::to_string(kDefaultDenseLimit));
  }
  if (n_max - n_min + 1 < 3) {
    throw std::invalid_argument("shots: need at least 3 system sizes for the fit");
  }
  if (k < 1 || k > (1 << n_min)) {
    throw std::invalid_argument("shots: k must be in [1, 2^n_min]");
  }
  for (double b : beta_list) {
    if (b < 0.0 || !std::isfinite(b)) throw std::invalid_argument("shots: invalid beta");
  }
  if (output.empty()) throw std::invalid_argument("shots: output path is required");
}

void cmd_shots(const ShotsConfig& config) {
  config.validate();
  std::vector<int> n_range;
  for (int n = config.n_min; n <= config.n_max; ++n) n_range.push_back(n);

  const std::vector<AlphaSweepRow> rows =
      alpha_sweep(config.gamma_list, config.h, config.beta_list, n_range, config.k);

  for (const AlphaSweepRow& r : rows) {
    // beta = 0 is exactly exponential in n, so a power law cannot fit it
    if (r.beta == 0.0 && r.fit.state_index == 0) {
      std::cerr << "warning: beta = 0 rows are exponential in n, not a power law "
                   "(gamma = "
                << r.gamma << ", r^2 = " << r.fit.r_squared << ")\n";
    }
  }

  std::ofstream out = open_output(config.output);
  write_alpha_sweep_csv(out, rows);

  if (!config.spectra_dir.empty()) {
    std::filesystem::create_directories(config.spectra_dir);
    for (double gamma : config.gamma_list) {
      for (int n : n_range) {
        for (double beta : config.beta_list) {
          const SpectrumResult s =
              exact_spectrum(build_xy_hamiltonian(n, gamma, config.h), beta, false);
          std::ostringstream name;
          name << "spectrum_gamma" << gamma << "_n" << n << "_beta" << beta << ".csv";
          std::ofstream f(std::filesystem::path(config.spectra_dir) / name.str());
          if (!f) throw InputError("cannot write spectrum CSV in " + config.spectra_dir);
          write_spectrum_csv(f, s);
        }
      }
    }
  }
}

int cmd_resources(const ResourcesConfig& config) {
  if (config.n < 2) throw std::invalid_argument("resources: n must be >= 2");
  const int la = config.layers_a < 0 ? config.n - 1 : config.layers_a;
  const int ls = config.layers_s < 0 ? config.n - 1 : config.layers_s;

  const ResourceCount measured = measured_resource_counts(build_gibbs_pqc(config.n, la, ls));
  const ResourceCount formula = resource_counts(config.n, la, ls);

  std::printf("resource counts for n=%d, l_A=%d, l_S=%d\n", config.n, la, ls);
  std::printf("%-14s %10s %10s\n", "", "formula", "census");
  auto line = [&](const char* name, long f, long c) {
    std::printf("%-14s %10ld %10ld%s\n", name, f, c, f == c ? "" : "   MISMATCH");
  };
  const bool applicable = formula.formulas_applicable;
  line("parameters", formula.parameters, measured.parameters);
  line("cnot_gates", formula.cnot_gates, measured.cnot_gates);
  line("sqrt_x_gates", formula.sqrt_x_gates, measured.sqrt_x_gates);
  line("cnot_depth", formula.circuit_depth, measured.circuit_depth);
  if (!applicable) {
    std::printf("note: formulas inapplicable (n > 2 required); census values shown\n");
  }

  const bool match = formula.parameters == measured.parameters &&
                     formula.cnot_gates == measured.cnot_gates &&
                     formula.sqrt_x_gates == measured.sqrt_x_gates &&
                     formula.circuit_depth == measured.circuit_depth;

  if (!config.output.empty()) {
    std::ofstream out = open_output(config.output);
    JsonWriter w(out);
    w.begin_object();
    w.key_value("schema_version", 1);
    w.key_value("command", "resources");
    w.key_value("n", config.n);
    w.key_value("layers_a", la);
    w.key_value("layers_s", ls);
    w.key_value("formulas_applicable", applicable);
    auto block = [&](const char* name, const ResourceCount& r) {
      w.key(name);
      w.begin_object();
      w.key_value("parameters", static_cast<std::int64_t>(r.parameters));
      w.key_value("cnot_gates", static_cast<std::int64_t>(r.cnot_gates));
      w.key_value("sqrt_x_gates", static_cast<std::int64_t>(r.sqrt_x_gates));
      w.key_value("cnot_depth", static_cast<std::int64_t>(r.circuit_depth));
      w.end_object();
    };
    block("formula", formula);
    block("census", measured);
    w.key_value("match", match);
    w.key_value("generated_at", timestamp_utc());
    w.end_object();
    out << "\n";
  }

  if (applicable && !match) return 5;
  return 0;
}

}  // namespace gibbs

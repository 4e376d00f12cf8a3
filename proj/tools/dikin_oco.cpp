// Command-line driver: run one experiment, run the verification suite, or
// sweep horizons x seeds and tabulate regret against the theory bounds.
//
// Exit codes: 0 success, 1 operational error (config, IO), 2 completed run
// whose measured regret violated a theory bound or a failed verification.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dikin/config.hpp"
#include "dikin/dikin.hpp"

namespace {

using namespace dikin;

enum class LogLevel { kQuiet = 0, kInfo = 1, kDebug = 2 };

LogLevel log_level() {
  const char* env = std::getenv("DIKIN_OCO_LOG");
  if (env == nullptr) return LogLevel::kQuiet;
  std::string v(env);
  if (v == "debug" || v == "2") return LogLevel::kDebug;
  if (v == "info" || v == "1") return LogLevel::kInfo;
  return LogLevel::kQuiet;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::kInfo) std::cerr << "[dikin-oco] " << msg << "\n";
}

struct RunArtifacts {
  std::map<std::string, Trace> traces;
  std::map<std::string, RegretCurve> curves;
  Eigen::VectorXd comparator;
  double grad_bound = 0.0;
  double theta = 0.0;
  double diam = 0.0;
  double thm1 = 0.0;
};

RunArtifacts execute(const ExperimentConfig& config) {
  RunArtifacts art;
  Barrier barrier(config.domain, config.diameter_override);
  std::vector<LossFunction> losses = config.adversary.generate(config.domain);
  art.traces = run_experiment(config);
  art.comparator = hindsight_optimum(losses, config.domain);
  art.grad_bound = grad_bound(losses);
  art.theta = barrier.theta();
  art.diam = barrier.diameter();
  art.thm1 =
      theorem_bounds(art.theta, art.grad_bound, art.diam, config.horizon)
          .theorem1;
  for (const auto& [name, trace] : art.traces) {
    art.curves.emplace(name, regret_curve(trace, losses, art.comparator));
  }
  return art;
}

// First round at which the cumulative regret exceeded the bound, or 0.
int first_exceeding_round(const RegretCurve& curve, double bound) {
  for (int t = 0; t < curve.cumulative.size(); ++t) {
    if (curve.cumulative[t] > bound) return t + 1;
  }
  return 0;
}

int cmd_run(const std::string& config_path, std::string out_dir,
            std::optional<std::uint64_t> seed, std::optional<int> horizon) {
  ExperimentConfig config = load_experiment_config(config_path, seed, horizon);
  if (!out_dir.empty()) config.out_dir = out_dir;
  if (config.out_dir.empty()) config.out_dir = ".";
  std::filesystem::create_directories(config.out_dir);

  log_info("running " + config_path + " (T=" + std::to_string(config.horizon) +
           ", seed=" + std::to_string(config.seed) + ")");
  RunArtifacts art = execute(config);
  std::vector<LossFunction> losses = config.adversary.generate(config.domain);
  Barrier barrier(config.domain, config.diameter_override);

  bool bound_violated = false;
  std::ostringstream summary;
  summary << "experiment: " << config_path << "\n"
          << "horizon: " << config.horizon << "  seed: " << config.seed << "\n"
          << "domain dimension: " << config.domain.dimension()
          << "  theta: " << art.theta << "  diameter: " << format_double(art.diam)
          << "  G: " << format_double(art.grad_bound) << "\n"
          << "comparator:";
  for (int i = 0; i < art.comparator.size(); ++i) {
    summary << ' ' << format_double(art.comparator[i]);
  }
  summary << "\ntheorem1_bound: " << format_double(art.thm1) << "\n\n";

  for (const auto& [name, trace] : art.traces) {
    const RegretCurve& curve = art.curves.at(name);
    std::string csv = config.out_dir + "/trace_" + name + ".csv";
    write_trace_csv(csv, trace, curve);

    summary << "learner: " << name << " (" << trace.kind << ")\n"
            << "  final_regret: " << format_double(curve.final_regret) << "\n"
            << "  theorem1_ratio: "
            << format_double(curve.final_regret / art.thm1) << "\n"
            << "  wall_seconds: " << format_double(trace.wall_seconds) << "\n";
    if (trace.is_ip) {
      summary << "  eta: " << format_double(trace.tuning.eta)
              << "  D: " << format_double(trace.tuning.D)
              << (trace.tuning.eta_clamped ? "  (eta clamped)" : "") << "\n"
              << "  min_slack: " << format_double(trace.min_slacks.minCoeff())
              << "  max_step_norm: "
              << format_double(trace.local_step_norms.maxCoeff())
              << "  unsafe_steps: " << trace.unsafe_steps << "\n";
      if (!trace.epoch_starts.empty()) {
        summary << "  epoch_starts:";
        for (int r : trace.epoch_starts) summary << ' ' << r;
        summary << "\n";
      }
      bool ok = curve.final_regret <= art.thm1;
      summary << "  theorem1_check: " << (ok ? "PASS" : "FAIL");
      if (!ok) {
        int round = first_exceeding_round(curve, art.thm1);
        summary << " (first exceeded at round " << round << ")";
        std::cerr << "theorem 1 bound violated by " << name << " at round "
                  << round << "\n";
        bound_violated = true;
      }
      summary << "\n";
    }
    summary << "\n";
  }

  // Per-run property report: the trajectory inequalities along each IP trace
  // against an interior comparator.
  std::ostringstream props;
  Eigen::VectorXd interior = config.x1 ? *config.x1
                                       : config.domain.interior_point();
  for (const auto& [name, trace] : art.traces) {
    if (!trace.is_ip) continue;
    if (trace.epoch_starts.size() > 1) {
      // Retuned mid-run: the recorded tuning only describes the last epoch.
      props << name << ": skipped (multiple tuning epochs)\n";
      continue;
    }
    if (trace.tuning.eta * trace.tuning.grad_bound * trace.tuning.diameter >
        0.25) {
      props << name << ": skipped (eta G diam > 1/4)\n";
      continue;
    }
    TrajectoryReport rep = verify_trajectory_inequalities(
        trace, losses, barrier, interior, trace.tuning);
    props << name << ": linearized_slack "
          << format_double(rep.worst_linearized_slack) << ", divergence_slack "
          << format_double(rep.worst_bregman_slack) << ", "
          << (rep.passed ? "PASS" : "FAIL") << "\n";
  }

  std::ofstream(config.out_dir + "/summary.txt") << summary.str();
  std::ofstream(config.out_dir + "/properties.txt") << props.str();
  std::cout << summary.str();
  return bound_violated ? 2 : 0;
}

int cmd_verify(int samples, std::uint64_t seed, double gradient_scale,
               const std::string& out_dir) {
  VerifyOptions options;
  options.samples = samples;
  options.seed = seed;
  options.gradient_scale = gradient_scale;
  log_info("verification suite with base sample count " +
           std::to_string(samples));
  auto rows = run_verification_suite(options);
  print_property_table(std::cout, rows);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream out(out_dir + "/verify_report.txt");
    print_property_table(out, rows);
  }
  return all_passed(rows) ? 0 : 2;
}

int cmd_sweep(const std::string& config_path, std::string out_dir, int workers) {
  SweepConfig sweep = load_sweep_config(config_path);
  if (out_dir.empty()) out_dir = ".";
  std::filesystem::create_directories(out_dir);

  struct Job {
    int horizon;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (int T : sweep.horizons) {
    for (std::uint64_t seed : sweep.seeds) jobs.push_back({T, seed});
  }

  struct Row {
    int horizon;
    std::uint64_t seed;
    std::string learner;
    double final_regret = 0.0;
    double thm1 = 0.0;
    std::string error;
  };
  std::vector<std::vector<Row>> results(jobs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const Job& job = jobs[i];
      try {
        ExperimentConfig config =
            instantiate_sweep_point(sweep, job.horizon, job.seed);
        RunArtifacts art = execute(config);
        for (const auto& [name, trace] : art.traces) {
          results[i].push_back({job.horizon, job.seed, name,
                                art.curves.at(name).final_regret, art.thm1,
                                ""});
        }
      } catch (const std::exception& e) {
        results[i].push_back(
            {job.horizon, job.seed, "", 0.0, 0.0, e.what()});
      }
    }
  };

  int pool = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
  std::vector<std::thread> threads;
  for (int w = 0; w < pool; ++w) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  std::string path = out_dir + "/summary.csv";
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 1;
  }
  out << "T,seed,learner,final_regret,thm1_bound,ratio,error\n";
  for (const auto& rows : results) {
    for (const Row& row : rows) {
      out << row.horizon << ',' << row.seed << ',' << row.learner << ',';
      if (row.error.empty()) {
        out << format_double(row.final_regret) << ','
            << format_double(row.thm1) << ','
            << format_double(row.final_regret / row.thm1) << ',';
      } else {
        out << ",,,";
      }
      out << row.error << '\n';
    }
  }
  log_info("sweep summary written to " + path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interior-point online convex optimization harness"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  std::optional<std::uint64_t> seed_override;
  std::optional<int> horizon_override;

  auto* run = app.add_subcommand("run", "Run one experiment from a config");
  run->add_option("--config", config_path, "experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "output directory");
  std::uint64_t seed_value = 0;
  int horizon_value = 0;
  auto* seed_opt = run->add_option("--seed", seed_value, "seed override");
  auto* horizon_opt =
      run->add_option("--horizon", horizon_value, "horizon override");

  int samples = 1000;
  std::uint64_t verify_seed = 7;
  double gradient_scale = 1.0;
  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--samples", samples, "base sample count");
  verify->add_option("--seed", verify_seed, "sampling seed");
  verify->add_option("--out", out_dir, "write the report here too");
  verify
      ->add_option("--inject-gradient-scale", gradient_scale,
                   "test hook: corrupt the analytic gradient by this factor")
      ->group("");  // hidden

  int workers = static_cast<int>(std::thread::hardware_concurrency());
  auto* sweep = app.add_subcommand("sweep", "Run a horizons x seeds sweep");
  sweep->add_option("--config", config_path, "sweep config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  sweep->add_option("--out", out_dir, "output directory");
  sweep->add_option("--workers", workers, "worker pool size");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (*seed_opt) seed_override = seed_value;
      if (*horizon_opt) horizon_override = horizon_value;
      return cmd_run(config_path, out_dir, seed_override, horizon_override);
    }
    if (verify->parsed()) {
      return cmd_verify(samples, verify_seed, gradient_scale, out_dir);
    }
    if (sweep->parsed()) {
      return cmd_sweep(config_path, out_dir, workers);
    }
  } catch (const ConfigParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

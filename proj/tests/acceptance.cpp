// Acceptance suite: end-to-end checks of the regret bounds, the validity
// guarantees, the geometric property suite, and the per-round cost target.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "dikin/dikin.hpp"

using namespace dikin;
using Clock = std::chrono::steady_clock;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

int failures = 0;

void report(int number, bool passed, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", passed ? "PASS" : "FAIL", number,
              detail.c_str());
  if (!passed) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Domain unit_box(int n) {
  return Domain::box(VectorXd::Constant(n, -1.0), VectorXd::Constant(n, 1.0));
}

// Feasibility stats accumulated across every IP trace that the criteria run.
struct FeasibilityStats {
  double min_slack = std::numeric_limits<double>::infinity();
  double max_step_norm = 0.0;
  int unsafe_steps = 0;
  long rounds = 0;

  void absorb(const Trace& trace) {
    if (!trace.is_ip) return;
    min_slack = std::min(min_slack, trace.min_slacks.minCoeff());
    max_step_norm = std::max(max_step_norm, trace.local_step_norms.maxCoeff());
    unsafe_steps += trace.unsafe_steps;
    rounds += trace.rounds();
  }
};

FeasibilityStats feasibility;

struct IidRun {
  Trace trace;
  std::vector<LossFunction> losses;
  double regret = 0.0;
};

IidRun run_iid_box(int T, std::uint64_t seed) {
  ExperimentConfig config;
  config.domain = unit_box(2);
  config.horizon = T;
  config.seed = seed;
  config.adversary = AdversaryScript::iid_linear(T, seed, 1.0);
  config.learners.push_back({.kind = "ip"});
  auto traces = run_experiment(config);
  IidRun run;
  run.trace = traces.at("ip");
  run.losses = config.adversary.generate(config.domain);
  VectorXd x_star = hindsight_optimum(run.losses, config.domain);
  run.regret = regret_curve(run.trace, run.losses, x_star).final_regret;
  feasibility.absorb(run.trace);
  return run;
}

std::vector<IidRun> criterion1_runs;

void criterion1_theorem1_bound() {
  auto start = Clock::now();
  const int T = 4096;
  const double diam = 2.0 * std::sqrt(2.0);
  const double bound = theorem_bounds(4.0, 1.0, diam, T).theorem1;

  bool all_within = true;
  double worst_ratio = 0.0;
  double avg_large = 0.0, avg_small = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    IidRun large = run_iid_box(T, seed);
    all_within = all_within && large.regret <= bound;
    worst_ratio = std::max(worst_ratio, large.regret / bound);
    avg_large += large.regret / double(T) / 5.0;
    criterion1_runs.push_back(std::move(large));
  }
  double elapsed = seconds_since(start);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    avg_small += run_iid_box(1024, seed).regret / 1024.0 / 5.0;
  }
  bool sublinear = avg_large < avg_small;

  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "IP regret <= %.4g on 5 seeds (worst ratio %.3f), "
                "R_4096/4096 = %.4f < R_1024/1024 = %.4f, %.2fs",
                bound, worst_ratio, avg_large, avg_small, elapsed);
  report(1, all_within && sublinear && elapsed < 10.0, buf);
}

void criterion2_ftl_separation() {
  auto start = Clock::now();
  const int T = 4096;
  ExperimentConfig config;
  config.domain = unit_box(1);
  config.horizon = T;
  config.adversary = AdversaryScript::alternating(T);
  config.learners.push_back({.kind = "ip"});
  config.learners.push_back({.kind = "ftl"});
  config.x1 = VectorXd::Zero(1);

  auto traces = run_experiment(config);
  auto losses = config.adversary.generate(config.domain);
  VectorXd x_star = hindsight_optimum(losses, config.domain);
  double ftl_regret =
      regret_curve(traces.at("ftl"), losses, x_star).final_regret;
  double ip_regret = regret_curve(traces.at("ip"), losses, x_star).final_regret;
  double bound = theorem_bounds(2.0, 1.0, 2.0, T).theorem1;
  feasibility.absorb(traces.at("ip"));
  double elapsed = seconds_since(start);

  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "FTL regret %.1f >= %.1f, IP regret %.3f <= %.4g, %.2fs",
                ftl_regret, 0.9 * (T - 1), ip_regret, bound, elapsed);
  report(2, ftl_regret >= 0.9 * (T - 1) && ip_regret <= bound && elapsed < 2.0,
         buf);
}

void criterion4_theorem2_interior() {
  Domain ball = Domain::ball(VectorXd::Zero(2), 1.0);
  Barrier barrier(ball);
  VectorXd x_star(2);
  x_star << 0.3, -0.2;
  VectorXd x1 = VectorXd::Zero(2);
  double D = std::sqrt(bregman_divergence(barrier, x_star, x1));

  bool ok = true;
  std::string detail = "D = " + std::to_string(D) + ";";
  for (int T : {256, 1024, 4096}) {
    ExperimentConfig config;
    config.domain = ball;
    config.horizon = T;
    config.adversary =
        AdversaryScript::fixed_quadratic(T, MatrixXd::Identity(2, 2), x_star);
    config.learners.push_back({.kind = "ip", .divergence_bound = D});
    config.x1 = x1;
    auto traces = run_experiment(config);
    auto losses = config.adversary.generate(config.domain);
    double G = grad_bound(losses);
    double regret =
        regret_curve(traces.at("ip"), losses, x_star).final_regret;
    double bound = *theorem_bounds(1.0, G, 2.0, T, D).theorem2;
    feasibility.absorb(traces.at("ip"));
    ok = ok && regret <= bound;
    char buf[96];
    std::snprintf(buf, sizeof(buf), " T=%d: %.4f <= %.2f", T, regret, bound);
    detail += buf;
  }
  report(4, ok, detail);
}

void criterion5_property_suite() {
  auto start = Clock::now();
  VerifyOptions options;  // defaults: base 1000 samples
  auto rows = run_verification_suite(options);
  double elapsed = seconds_since(start);
  int failed = 0;
  for (const auto& row : rows) {
    if (!row.passed) ++failed;
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%zu property rows, %d failed, %.2fs (< 30s)", rows.size(),
                failed, elapsed);
  report(5, failed == 0 && elapsed < 30.0 && rows.size() >= 12, buf);
}

void criterion6_trajectory_inequalities() {
  Barrier barrier(unit_box(2));
  Rng rng(17);
  VectorXd comparator = sample_interior(barrier.domain(), rng, 0.3);
  double worst_lin = std::numeric_limits<double>::infinity();
  double worst_breg = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (const IidRun& run : criterion1_runs) {
    TrajectoryReport rep = verify_trajectory_inequalities(
        run.trace, run.losses, barrier, comparator, run.trace.tuning);
    worst_lin = std::min(worst_lin, rep.worst_linearized_slack);
    worst_breg = std::min(worst_breg, rep.worst_bregman_slack);
    ok = ok && rep.passed;
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "worst linearized slack %.3e, worst divergence slack %.3e "
                "over criterion-1 runs",
                worst_lin, worst_breg);
  report(6, ok && worst_lin >= -1e-8 && worst_breg >= -1e-8, buf);
}

void criterion7_adaptivity() {
  const int T = 4096;
  VectorXd c(2);
  c << 1.0, 0.0;
  ExperimentConfig config;
  config.domain = unit_box(2);
  config.horizon = T;
  config.adversary =
      AdversaryScript::piecewise_linear(T, {{T / 2, c}, {T / 2, -c}});
  config.learners.push_back({.kind = "ip"});
  config.learners.push_back({.kind = "ftl"});

  auto traces = run_experiment(config);
  auto losses = config.adversary.generate(config.domain);
  feasibility.absorb(traces.at("ip"));

  double bound = theorem_bounds(4.0, 1.0, 2.0 * std::sqrt(2.0), T).theorem1;
  double ip_first =
      subinterval_regret(traces.at("ip"), losses, 1, T / 2, config.domain);
  double ip_second =
      subinterval_regret(traces.at("ip"), losses, T / 2 + 1, T, config.domain);
  double ftl_first =
      subinterval_regret(traces.at("ftl"), losses, 1, T / 2, config.domain);
  double ftl_second =
      subinterval_regret(traces.at("ftl"), losses, T / 2 + 1, T, config.domain);

  bool ip_ok = ip_first <= bound && ip_second <= bound;
  bool ftl_bad_half = std::max(ftl_first, ftl_second) >= 0.2 * (T / 2);
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "IP halves %.2f / %.2f <= %.4g; FTL halves %.1f / %.1f "
                "(threshold %.1f)",
                ip_first, ip_second, bound, ftl_first, ftl_second,
                0.2 * (T / 2));
  report(7, ip_ok && ftl_bad_half, buf);
}

void criterion3_strict_feasibility() {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%ld IP rounds: min slack %.3e > 0, max step norm %.6f < 1, "
                "%d unsafe steps",
                feasibility.rounds, feasibility.min_slack,
                feasibility.max_step_norm, feasibility.unsafe_steps);
  report(3, feasibility.min_slack > 0.0 && feasibility.max_step_norm < 1.0 &&
                feasibility.unsafe_steps == 0 && feasibility.rounds > 0,
         buf);
}

void criterion8_per_round_cost() {
  const int n = 100;
  // Box [-1, 1]^100 written as a dense 200-constraint polytope so the step
  // exercises the general path: dense Hessian assembly plus an order-n SPD
  // solve per round.
  MatrixXd A(2 * n, n);
  A.topRows(n) = MatrixXd::Identity(n, n);
  A.bottomRows(n) = -MatrixXd::Identity(n, n);
  VectorXd b = VectorXd::Constant(2 * n, -1.0);
  Domain domain = Domain::polytope(A, b, VectorXd::Zero(n),
                                   2.0 * std::sqrt(double(n)));
  Barrier barrier(domain);

  const int T = 200;
  auto losses = AdversaryScript::iid_linear(T, 99, 1.0).generate(domain);
  TuningConstants tuning =
      tune_rate(barrier.theta(), 1.0, barrier.diameter(), T);
  IpLearner learner("ip", barrier, tuning, VectorXd::Zero(n));

  std::vector<double> millis;
  millis.reserve(T);
  for (const auto& f : losses) {
    auto t0 = Clock::now();
    learner.observe(f);
    millis.push_back(seconds_since(t0) * 1e3);
    feasibility.min_slack =
        std::min(feasibility.min_slack, domain.min_slack(learner.current()));
    feasibility.max_step_norm =
        std::max(feasibility.max_step_norm, learner.last_step_local_norm());
  }
  std::nth_element(millis.begin(), millis.begin() + T / 2, millis.end());
  double median = millis[T / 2];

  feasibility.unsafe_steps += learner.state().unsafe_steps;
  feasibility.rounds += T;

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "n=100, m=200 polytope: median per-round %.3f ms <= 5 ms "
                "(one barrier eval + one order-n SPD solve)",
                median);
  report(8, median <= 5.0, buf);
}

}  // namespace

int main() {
  criterion1_theorem1_bound();
  criterion2_ftl_separation();
  criterion4_theorem2_interior();
  criterion5_property_suite();
  criterion6_trajectory_inequalities();
  criterion7_adaptivity();
  criterion8_per_round_cost();
  criterion3_strict_feasibility();  // aggregates every run above

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}

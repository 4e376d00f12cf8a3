#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dikin/barrier.hpp"
#include "dikin/domain.hpp"
#include "dikin/learners.hpp"
#include "dikin/losses.hpp"

namespace dikin {

/// One learner entry of an experiment; unset overrides fall back to the
/// canonical tuning derived from the adversary and domain.
struct LearnerSpec {
  std::string kind;   // "ip" | "ip_doubling" | "ogd" | "ftl"
  std::string label;  // defaults to kind
  std::optional<double> eta;
  std::optional<double> grad_bound;
  std::optional<double> divergence_bound;  // Theorem-2 style D
  std::optional<double> g0;                // doubling initial guess
};

struct ExperimentConfig {
  Domain domain = Domain::box(Eigen::VectorXd::Constant(1, -1.0),
                              Eigen::VectorXd::Constant(1, 1.0));
  AdversaryScript adversary = AdversaryScript::alternating(2);
  std::vector<LearnerSpec> learners;
  int horizon = 2;
  std::uint64_t seed = 0;
  std::optional<Eigen::VectorXd> x1;       // default: domain interior point
  std::optional<double> diameter_override;
  std::string out_dir;
};

/// Per-round record of one learner's play. `iterates` holds x_1..x_{T+1}
/// (the post-final iterate is kept for the trajectory checks).
struct Trace {
  std::string learner;
  std::string kind;
  Eigen::MatrixXd iterates;          // (T+1) x n
  Eigen::VectorXd losses;            // T
  Eigen::VectorXd grad_norms;        // T
  Eigen::VectorXd min_slacks;        // T, slack at the played x_t
  Eigen::VectorXd local_step_norms;  // T, zero for non-IP learners
  TuningConstants tuning;            // meaningful for IP learners
  bool is_ip = false;
  int unsafe_steps = 0;
  int grad_bound_violations = 0;
  std::vector<int> epoch_starts;     // doubling epochs (1-based rounds)
  double wall_seconds = 0.0;

  int rounds() const { return static_cast<int>(losses.size()); }
  Eigen::VectorXd iterate(int t) const { return iterates.row(t - 1); }  // 1-based
};

struct RegretCurve {
  Eigen::VectorXd comparator;
  Eigen::VectorXd cumulative;  // R_1..R_T
  double final_regret = 0.0;
};

struct BoundValues {
  double theorem1 = 0.0;                 // 9 sqrt(th) G D sqrt(T ln T) + 9 (GD)^{3/2} sqrt(T)
  std::optional<double> theorem2;        // 8 D G diam sqrt(T), when D is supplied
};

struct TrajectoryReport {
  int rounds = 0;
  double worst_linearized_slack = 0.0;  // per-round gradient inequality
  double worst_bregman_slack = 0.0;     // per-round divergence step bound
  bool passed = false;
};

/// Runs the full-information protocol: each learner commits x_t, then the
/// round's loss is revealed to all of them (identical sequence across
/// learners). Deterministic given the config seed.
std::map<std::string, Trace> run_experiment(const ExperimentConfig& config);

/// Builds the learner list for a config; exposed for callers that drive the
/// protocol themselves.
std::vector<std::unique_ptr<Learner>> make_learners(
    const ExperimentConfig& config, const Barrier& barrier,
    const std::vector<LossFunction>& losses);

/// argmin over the domain of the summed losses. Exact closed forms for
/// linear sums (sign rule / vertex enumeration / radial) and for quadratic
/// sums with a feasible stationary point; otherwise a brute-force grid
/// search (n <= 3). Ties break toward the minimum-norm argmin.
Eigen::VectorXd hindsight_optimum(const std::vector<LossFunction>& losses,
                                  const Domain& domain);

/// Brute-force oracle: dense grid over the domain's bounding box followed by
/// local refinement. Only for n <= 3; at least `min_points` grid nodes.
Eigen::VectorXd hindsight_optimum_grid(const std::vector<LossFunction>& losses,
                                       const Domain& domain,
                                       long min_points = 1000000);

/// Exact partial sums of f_t(x_t) - f_t(x*).
RegretCurve regret_curve(const Trace& trace,
                         const std::vector<LossFunction>& losses,
                         const Eigen::VectorXd& x_star);

/// Regret over rounds s..t (1-based, inclusive) against the hindsight
/// optimum of that window (recomputed, not sliced from the global one).
double subinterval_regret(const Trace& trace,
                          const std::vector<LossFunction>& losses, int s, int t,
                          const Domain& domain);

/// Numeric values of the paper-derived regret bounds.
BoundValues theorem_bounds(double theta, double grad_bound, double diameter,
                           int horizon, std::optional<double> D = {});

/// Evaluates, at every round of an IP trace, the linearized-regret
/// inequality
///   eta g_t'(x_t - x*) - [grad R(x_{t+1}) - grad R(x_t)]'(x* - x_t)
///     <= 8 G^2 diam^2 eta^2
/// and the divergence step bound B_R(x_t, x_{t+1}) <= 2 eta^2 G^2 diam^2.
/// Requires a strictly interior comparator and eta G diam <= 1/4 (violations
/// are rejected with std::invalid_argument, not reported as failures).
TrajectoryReport verify_trajectory_inequalities(
    const Trace& trace, const std::vector<LossFunction>& losses,
    const Barrier& barrier, const Eigen::VectorXd& comparator,
    const TuningConstants& tuning);

// --- flat-file outputs -----------------------------------------------------

/// Writes the per-round trace CSV with columns (in this exact order):
/// t, x_0..x_{n-1}, loss, grad_norm, min_slack, local_step_norm, cum_regret.
/// Floating-point values carry 17 significant digits.
void write_trace_csv(const std::string& path, const Trace& trace,
                     const RegretCurve& regret);

std::string format_double(double v);  // 17 significant digits

}  // namespace dikin

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dikin/barrier.hpp"
#include "dikin/domain.hpp"
#include "dikin/losses.hpp"

namespace dikin {

/// Step-size constants. The canonical choice is
///   D = sqrt(theta ln T + G diam),  eta = D / (sqrt(10) G diam sqrt(T)),
/// clamped to eta = 1/(4 G diam) whenever the raw value would break the
/// eta G diam <= 1/4 regime (possible at tiny T); `eta_clamped` records it.
struct TuningConstants {
  double theta = 0.0;
  double grad_bound = 0.0;
  double diameter = 0.0;
  int horizon = 0;
  double D = 0.0;
  double eta = 0.0;
  bool eta_clamped = false;
};

TuningConstants tune_rate(double theta, double grad_bound, double diameter,
                          int horizon);

/// Same learning-rate rule with a caller-supplied divergence bound
/// D >= sqrt(B_R(x*, x1)) instead of the canonical D.
TuningConstants tune_rate_with_divergence_bound(double D, double grad_bound,
                                                double diameter, int horizon,
                                                double theta = 0.0);

/// State of the interior-point learner between rounds.
struct IpStepState {
  Eigen::VectorXd x;
  TuningConstants tuning;
  int round = 0;
  double last_step_local_norm = 0.0;
  int unsafe_steps = 0;            // steps shrunk back into the Dikin ball
  int grad_bound_violations = 0;   // observed ||g|| above tuning.grad_bound
};

/// One update x' = x - eta H^{-1} g of the interior-point learner. The step
/// is guaranteed to stay strictly inside the Dikin ellipsoid (an oversized
/// step, which signals a violated gradient bound, is shrunk to local norm
/// 1/2 and counted in `unsafe_steps`). Throws NotInteriorError if the new
/// point fails the strict interior check, which aborts the run.
IpStepState ip_step(const IpStepState& state, const BarrierEval& at_x,
                    const Eigen::VectorXd& g, const Domain& domain);

/// Euclidean projection onto the domain: clamp for boxes, radial scaling for
/// balls, Dykstra's alternating half-space projections for polytopes
/// (accurate to ~1e-8 in the iterate).
Eigen::VectorXd project(const Domain& domain, const Eigen::VectorXd& y);

struct OgdState {
  Eigen::VectorXd x;
  double eta = 0.0;
};

/// Projected online gradient descent: x' = project(x - eta g).
OgdState ogd_step(const OgdState& state, const Eigen::VectorXd& g,
                  const Domain& domain);

/// Cumulative-loss description consumed by the FTL step. `last` (when
/// present) is the most recent loss; it only participates in tie-breaking.
struct FtlHistory {
  int rounds = 0;
  Eigen::VectorXd linear_sum;           // sum of linear coefficients
  Eigen::MatrixXd quadratic_sum;        // sum of quadratic matrices (may be empty)
  std::optional<LossFunction> last;

  void add(const LossFunction& f);
  bool has_quadratic() const { return quadratic_sum.size() > 0; }
};

/// Minimizer of the cumulative loss over the domain. Ties are broken first
/// toward the minimizer of the most recent loss (the adversarial tie-break
/// under which FTL alternates on the classic +/-x sequence), then by
/// minimum Euclidean norm.
Eigen::VectorXd ftl_step(const FtlHistory& history, const Domain& domain);

// --- harness-facing learner objects ---------------------------------------

/// A sequential learner: commit to current(), then observe the revealed loss.
class Learner {
 public:
  virtual ~Learner() = default;
  virtual const Eigen::VectorXd& current() const = 0;
  virtual void observe(const LossFunction& loss) = 0;
  virtual double last_step_local_norm() const { return 0.0; }
  virtual const std::string& name() const = 0;
};

class IpLearner : public Learner {
 public:
  IpLearner(std::string name, const Barrier& barrier, TuningConstants tuning,
            Eigen::VectorXd x1);

  const Eigen::VectorXd& current() const override { return state_.x; }
  void observe(const LossFunction& loss) override;
  double last_step_local_norm() const override {
    return state_.last_step_local_norm;
  }
  const std::string& name() const override { return name_; }

  const IpStepState& state() const { return state_; }
  const TuningConstants& tuning() const { return state_.tuning; }

 protected:
  std::string name_;
  const Barrier& barrier_;
  IpStepState state_;
};

/// IP learner that starts from a guess G0 and doubles its gradient-bound
/// estimate (retuning eta) whenever an observed gradient exceeds it; play
/// continues from the current iterate. Epoch start rounds are recorded.
class DoublingIpLearner : public IpLearner {
 public:
  DoublingIpLearner(std::string name, const Barrier& barrier,
                    Eigen::VectorXd x1, double g0, double theta,
                    double diameter, int horizon);

  void observe(const LossFunction& loss) override;

  double current_grad_bound() const { return state_.tuning.grad_bound; }
  const std::vector<int>& epoch_starts() const { return epoch_starts_; }

 private:
  std::vector<int> epoch_starts_;
};

class OgdLearner : public Learner {
 public:
  OgdLearner(std::string name, const Domain& domain, double eta,
             Eigen::VectorXd x1);

  const Eigen::VectorXd& current() const override { return state_.x; }
  void observe(const LossFunction& loss) override;
  const std::string& name() const override { return name_; }

 private:
  std::string name_;
  const Domain& domain_;
  OgdState state_;
};

class FtlLearner : public Learner {
 public:
  FtlLearner(std::string name, const Domain& domain, Eigen::VectorXd x1);

  const Eigen::VectorXd& current() const override { return x_; }
  void observe(const LossFunction& loss) override;
  const std::string& name() const override { return name_; }

 private:
  std::string name_;
  const Domain& domain_;
  FtlHistory history_;
  Eigen::VectorXd x_;
};

}  // namespace dikin

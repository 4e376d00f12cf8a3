#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "dikin/domain.hpp"

namespace dikin {

enum class LossKind { kLinear, kQuadratic };

/// Convex per-round cost with analytic gradient and a certified bound on
/// ||grad f|| over the domain.
class LossFunction {
 public:
  /// f(x) = c'x; the gradient bound is ||c|| exactly.
  static LossFunction linear(Eigen::VectorXd c);

  /// f(x) = 1/2 x'Qx + c'x with Q symmetric PSD (throws NotPsdError below
  /// -1e-10). The gradient bound is the analytic envelope
  /// ||Q|| (||center|| + diam) + ||c|| over the given domain.
  static LossFunction quadratic(Eigen::MatrixXd Q, Eigen::VectorXd c,
                                const Domain& domain);

  double eval(const Eigen::VectorXd& x) const;
  Eigen::VectorXd grad(const Eigen::VectorXd& x) const;
  double grad_bound() const { return grad_bound_; }

  LossKind kind() const { return kind_; }
  const Eigen::VectorXd& linear_coeff() const { return c_; }
  const Eigen::MatrixXd& quadratic_matrix() const { return Q_; }
  int dimension() const { return static_cast<int>(c_.size()); }

 private:
  LossFunction() = default;

  LossKind kind_ = LossKind::kLinear;
  Eigen::VectorXd c_;
  Eigen::MatrixXd Q_;
  double grad_bound_ = 0.0;
};

enum class AdversaryKind { kIidLinear, kAlternating, kPiecewiseLinear, kFixedQuadratic };

struct Segment {
  int length = 0;
  Eigen::VectorXd c;
};

/// Scripted adversary: expands deterministically (same seed, same sequence)
/// into the full loss list f_1..f_T before play starts. Every emitted loss
/// satisfies ||grad f|| <= declared_grad_bound().
class AdversaryScript {
 public:
  /// Coefficients drawn uniformly on the sphere of radius `scale`, which
  /// pins the gradient bound to `scale` exactly.
  static AdversaryScript iid_linear(int horizon, std::uint64_t seed, double scale);

  /// The FTL-breaking sequence on the box [-1, 1]: f_1(x) = x, f_2 = -x, ...
  static AdversaryScript alternating(int horizon);

  /// Segment coefficients played in order; lengths must sum to the horizon.
  static AdversaryScript piecewise_linear(int horizon, std::vector<Segment> segments);

  /// The same quadratic 1/2 (x - opt)' Q (x - opt) every round (constant
  /// dropped); `optimum` is its unconstrained minimizer.
  static AdversaryScript fixed_quadratic(int horizon, Eigen::MatrixXd Q,
                                         Eigen::VectorXd optimum);

  std::vector<LossFunction> generate(const Domain& domain) const;
  /// The script's declared gradient bound G over this domain.
  double declared_grad_bound(const Domain& domain) const;

  AdversaryKind kind() const { return kind_; }
  int horizon() const { return horizon_; }
  std::uint64_t seed() const { return seed_; }
  double scale() const { return scale_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const Eigen::MatrixXd& quadratic_matrix() const { return Q_; }
  const Eigen::VectorXd& quadratic_optimum() const { return optimum_; }

 private:
  AdversaryScript() = default;

  AdversaryKind kind_ = AdversaryKind::kIidLinear;
  int horizon_ = 0;
  std::uint64_t seed_ = 0;
  double scale_ = 1.0;
  std::vector<Segment> segments_;
  Eigen::MatrixXd Q_;
  Eigen::VectorXd optimum_;
};

/// Max of the per-loss certified bounds: the G fed into the tuning rule.
double grad_bound(const std::vector<LossFunction>& losses);

}  // namespace dikin

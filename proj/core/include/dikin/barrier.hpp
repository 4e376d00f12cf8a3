#pragma once

#include <optional>

#include <Eigen/Core>

#include "dikin/domain.hpp"

namespace dikin {

/// Value, gradient and Hessian of the barrier at one interior point. The
/// Hessian is symmetric positive definite everywhere in the interior.
struct BarrierEval {
  double value = 0.0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
};

struct DerivativeReport {
  double gradient_rel_error = 0.0;  // analytic gradient vs FD of the value
  double hessian_rel_error = 0.0;   // analytic Hessian vs FD of the gradient
};

/// Ratios of the two self-concordance conditions at one (x, u) pair; both
/// are at most 1 for a genuine theta-self-concordant barrier.
struct SelfConcordanceReport {
  double third_derivative_ratio = 0.0;  // |f'''| / (2 f''^{3/2})
  double theta_ratio = 0.0;             // f'^2 / (theta f'')

  bool ok(double tol = 1e-4) const {
    return third_derivative_ratio <= 1.0 + tol && theta_ratio <= 1.0 + tol;
  }
};

/// theta-self-concordant barrier with closed-form derivatives:
///   polytope  R(x) = -sum_i log((Ax)_i - b_i)        theta = m
///   box       same barrier through O(n) closed forms  theta = 2n
///   ball      R(x) = -log(r^2 - ||x - c||^2)          theta = 1
class Barrier {
 public:
  explicit Barrier(Domain domain, std::optional<double> diameter_override = {});

  const Domain& domain() const { return domain_; }
  double theta() const { return theta_; }
  /// Exact Euclidean diameter for box/ball; certified upper bound for
  /// general polytopes.
  double diameter() const { return diameter_; }

  /// Throws NotInteriorError (carrying the minimum slack) off the interior.
  BarrierEval eval(const Eigen::VectorXd& x) const;
  double value(const Eigen::VectorXd& x) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& x) const;

 private:
  Domain domain_;
  double theta_;
  double diameter_;
};

BarrierEval eval_polytope_barrier(const Domain& domain, const Eigen::VectorXd& x);
BarrierEval eval_ball_barrier(const Domain& domain, const Eigen::VectorXd& x);

/// Solves hessian * v = g by Cholesky factorization with one round of
/// iterative refinement; the residual satisfies
/// ||hessian v - g|| <= 1e-10 (1 + ||g||). Throws NotPositiveDefiniteError
/// when the factorization fails or the residual cannot be met.
Eigen::VectorXd hessian_solve(const Eigen::MatrixXd& hessian,
                              const Eigen::VectorXd& g);

/// Central-finite-difference validation of the analytic derivatives at an
/// interior x. h is the absolute FD step (must lie in [1e-7, 1e-3]).
DerivativeReport check_derivatives(const Barrier& barrier,
                                   const Eigen::VectorXd& x, double h);

/// Evaluates both self-concordance conditions for f(t) = R(x + t u) at t=0.
/// The third directional derivative comes from central differences of the
/// analytic Hessian along u.
SelfConcordanceReport check_self_concordance(const Barrier& barrier,
                                             const Eigen::VectorXd& x,
                                             const Eigen::VectorXd& u,
                                             double theta);

}  // namespace dikin

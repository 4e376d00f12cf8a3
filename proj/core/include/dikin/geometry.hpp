#pragma once

#include <Eigen/Core>

#include "dikin/barrier.hpp"
#include "dikin/domain.hpp"
#include "dikin/rng.hpp"

namespace dikin {

/// One probe point x + h classified against the Dikin ellipsoid at x.
struct RegionSample {
  Eigen::VectorXd point;
  double local_norm = 0.0;
  bool inside_dikin = false;  // local_norm < 1
  double min_slack = 0.0;
};

/// Boundary-growth quantities along one ray, plus the slacks of the three
/// growth inequalities (positive slack = inequality satisfied with margin).
struct BoundaryReport {
  double t_max = 0.0;
  double tau_max = 0.0;
  double gradient_ray_value = 0.0;  // u' grad R(x)
  bool gradient_check_applicable = false;
  double gradient_slack = 0.0;      // theta/t_max - u' grad R(x)
  double growth_slack = 0.0;        // -log(1 - s/t_max) theta - [R(y) - R(x)]
  double inner_subset_slack = 0.0;  // log(1 + 1/delta) theta - [R(y) - R(x)]
};

/// Aggregate result of the Dikin / Hessian-ordering sampling check.
struct DikinHessianReport {
  int samples = 0;
  bool all_interior = true;
  double worst_sandwich_slack = 0.0;     // min over samples and both orderings
  double max_inv_hessian_eigenvalue = 0.0;
  double inv_hessian_slack = 0.0;        // diameter^2 - max eig of H^{-1}
  bool passed = false;
};

/// Hessian-induced local norm at x: sqrt(h' [grad^2 R(x)] h).
double local_norm(const BarrierEval& eval, const Eigen::VectorXd& h);

RegionSample region_sample(const Domain& domain, const BarrierEval& at_x,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& h);

/// B_R(x, y) = R(x) - R(y) - grad R(y)'(x - y); nonnegative, zero iff x == y.
double bregman_divergence(const Barrier& barrier, const Eigen::VectorXd& x,
                          const Eigen::VectorXd& y);

/// Pulls a comparator toward x1 far enough to enter the inner subset
/// K(delta; x1): the result lies at distance min(||x*-x1||, tau_max/(1+delta))
/// from x1 along the ray to x*. Comparators already inside the inner subset
/// are returned unchanged, which keeps the displacement below delta * diam.
/// Returns x1 itself for the degenerate x* == x1 case.
Eigen::VectorXd comparator_shift(const Domain& domain, const Eigen::VectorXd& x1,
                                 const Eigen::VectorXd& x_star, double delta);

/// Membership test for K(delta; x1) = {y : ||y-x1|| <= tau_max(x1,y)/(1+delta)}.
bool in_inner_subset(const Domain& domain, const Eigen::VectorXd& x1,
                     const Eigen::VectorXd& y, double delta);

/// Draws `samples` random h with ||h||_x < 1 and checks that every x + h is
/// strictly interior, that both sides of the Hessian sandwich
///   (1 - ||h||_x)^2 H(x) <= H(x+h) <= (1 - ||h||_x)^{-2} H(x)
/// hold with whitened-eigenvalue slack >= -1e-8, and that the largest
/// eigenvalue of H(x)^{-1} is at most diameter^2 + 1e-8.
DikinHessianReport verify_dikin_and_hessian_bounds(const Barrier& barrier,
                                                   const Eigen::VectorXd& x,
                                                   int samples, Rng& rng);

/// Checks the boundary-growth inequalities along the ray (x, u):
/// the gradient bound u' grad R(x) <= theta / t_max (skipped when the ray
/// derivative is nonpositive), the log growth bound at s = 0.9 t_max, and
/// the inner-subset growth bound at the K(delta; x) shell point.
BoundaryReport verify_boundary_growth(const Barrier& barrier,
                                      const Eigen::VectorXd& x,
                                      const Eigen::VectorXd& u, double theta,
                                      double delta = 1.0);

}  // namespace dikin

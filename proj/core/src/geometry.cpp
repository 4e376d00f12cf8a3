#include "dikin/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace dikin {

double local_norm(const BarrierEval& eval, const Eigen::VectorXd& h) {
  double q = h.dot(eval.hessian * h);
  return std::sqrt(std::max(q, 0.0));
}

RegionSample region_sample(const Domain& domain, const BarrierEval& at_x,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& h) {
  RegionSample s;
  s.point = x + h;
  s.local_norm = local_norm(at_x, h);
  s.inside_dikin = s.local_norm < 1.0;
  s.min_slack = domain.min_slack(s.point);
  return s;
}

double bregman_divergence(const Barrier& barrier, const Eigen::VectorXd& x,
                          const Eigen::VectorXd& y) {
  BarrierEval at_y = barrier.eval(y);
  double value_x = barrier.value(x);
  return value_x - at_y.value - at_y.gradient.dot(x - y);
}

Eigen::VectorXd comparator_shift(const Domain& domain, const Eigen::VectorXd& x1,
                                 const Eigen::VectorXd& x_star, double delta) {
  if (!(delta > 0.0)) throw Error("comparator shift requires delta > 0");
  Eigen::VectorXd diff = x_star - x1;
  double dist = diff.norm();
  if (dist <= 1e-14 * (1.0 + x1.norm())) return x1;  // degenerate comparator

  Eigen::VectorXd u = diff / dist;
  double tau = ray_to_boundary(domain, x1, u);
  double target = std::min(dist, tau / (1.0 + delta));
  return x1 + target * u;
}

bool in_inner_subset(const Domain& domain, const Eigen::VectorXd& x1,
                     const Eigen::VectorXd& y, double delta) {
  Eigen::VectorXd diff = y - x1;
  double dist = diff.norm();
  if (dist <= 1e-14 * (1.0 + x1.norm())) return true;  // tau_max(x, x) := 0
  double tau = ray_to_boundary(domain, x1, diff / dist);
  return dist <= tau / (1.0 + delta) + 1e-12;
}

DikinHessianReport verify_dikin_and_hessian_bounds(const Barrier& barrier,
                                                   const Eigen::VectorXd& x,
                                                   int samples, Rng& rng) {
  if (samples < 1) throw Error("need at least one sample");
  BarrierEval at_x = barrier.eval(x);
  const int n = static_cast<int>(x.size());

  Eigen::LLT<Eigen::MatrixXd> llt(at_x.hessian);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefiniteError("Hessian is not positive definite");
  }
  Eigen::MatrixXd L = llt.matrixL();

  DikinHessianReport report;
  report.samples = samples;
  report.worst_sandwich_slack = std::numeric_limits<double>::infinity();

  for (int k = 0; k < samples; ++k) {
    // Uniform draw in the unit ball mapped through L^{-T} gives ||h||_x < 1;
    // the radius stays epsilon short of 1 so round-off cannot graze the
    // boundary of the ellipsoid.
    Eigen::VectorXd z = rng.unit_sphere(n) *
                        std::pow(rng.uniform(0.0, 1.0), 1.0 / n) * (1.0 - 1e-6);
    Eigen::VectorXd h = L.transpose().triangularView<Eigen::Upper>().solve(z);
    double rho = local_norm(at_x, h);

    Eigen::VectorXd y = x + h;
    if (!barrier.domain().is_interior(y)) {
      report.all_interior = false;
      continue;
    }

    // Whitened congruence W = L^{-1} H(y) L^{-T}; the sandwich becomes
    // (1-rho)^2 <= eig(W) <= (1-rho)^{-2}.
    Eigen::MatrixXd Hy = barrier.eval(y).hessian;
    Eigen::MatrixXd Y = L.triangularView<Eigen::Lower>().solve(Hy);
    Eigen::MatrixXd W =
        L.triangularView<Eigen::Lower>().solve(Y.transpose()).transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (W + W.transpose()));

    double lo = (1.0 - rho) * (1.0 - rho);
    double hi = 1.0 / lo;
    double slack_lower = eig.eigenvalues().minCoeff() - lo;
    double slack_upper = hi - eig.eigenvalues().maxCoeff();
    report.worst_sandwich_slack =
        std::min({report.worst_sandwich_slack, slack_lower, slack_upper});
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(at_x.hessian);
  report.max_inv_hessian_eigenvalue = 1.0 / eig.eigenvalues().minCoeff();
  double d2 = barrier.diameter() * barrier.diameter();
  report.inv_hessian_slack = d2 - report.max_inv_hessian_eigenvalue;

  report.passed = report.all_interior &&
                  report.worst_sandwich_slack >= -1e-8 &&
                  report.inv_hessian_slack >= -1e-8;
  return report;
}

BoundaryReport verify_boundary_growth(const Barrier& barrier,
                                      const Eigen::VectorXd& x,
                                      const Eigen::VectorXd& u, double theta,
                                      double delta) {
  BoundaryReport report;
  report.t_max = ray_to_boundary(barrier.domain(), x, u);
  report.tau_max = report.t_max;

  double value_x = barrier.value(x);
  report.gradient_ray_value = u.dot(barrier.gradient(x));

  report.gradient_check_applicable = report.gradient_ray_value > 0.0;
  if (report.gradient_check_applicable) {
    report.gradient_slack = theta / report.t_max - report.gradient_ray_value;
  }

  // Log growth toward the boundary: y = x + 0.9 t_max u.
  double s = 0.9 * report.t_max;
  double growth = barrier.value(x + s * u) - value_x;
  report.growth_slack = -std::log(1.0 - s / report.t_max) * theta - growth;

  // Inner-subset growth: the worst point of K(delta; x) along u.
  double t_inner = report.t_max / (1.0 + delta);
  double inner_growth = barrier.value(x + t_inner * u) - value_x;
  report.inner_subset_slack = std::log(1.0 + 1.0 / delta) * theta - inner_growth;

  return report;
}

}  // namespace dikin

#include "dikin/barrier.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>

namespace dikin {

namespace {

BarrierEval eval_box_barrier(const Domain& domain, const Eigen::VectorXd& x) {
  const int n = domain.dimension();
  double slack = domain.min_slack(x);
  if (slack <= kInteriorSlack) throw NotInteriorError(slack);

  BarrierEval out;
  out.value = 0.0;
  out.gradient = Eigen::VectorXd::Zero(n);
  out.hessian = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double lo = x[i] - domain.lower()[i];
    double hi = domain.upper()[i] - x[i];
    out.value -= std::log(lo) + std::log(hi);
    out.gradient[i] = 1.0 / hi - 1.0 / lo;
    out.hessian(i, i) = 1.0 / (lo * lo) + 1.0 / (hi * hi);
  }
  return out;
}

}  // namespace

BarrierEval eval_polytope_barrier(const Domain& domain, const Eigen::VectorXd& x) {
  if (domain.kind() == DomainKind::kBox) return eval_box_barrier(domain, x);
  if (domain.kind() != DomainKind::kPolytope) {
    throw Error("polytope barrier requires a polyhedral domain");
  }
  const Eigen::MatrixXd& A = domain.constraint_matrix();
  Eigen::VectorXd s = A * x - domain.constraint_rhs();
  double slack = s.minCoeff();
  if (slack <= kInteriorSlack) throw NotInteriorError(slack);

  BarrierEval out;
  out.value = -s.array().log().sum();
  Eigen::VectorXd inv = s.cwiseInverse();
  out.gradient = -A.transpose() * inv;
  out.hessian = A.transpose() * inv.array().square().matrix().asDiagonal() * A;
  return out;
}

BarrierEval eval_ball_barrier(const Domain& domain, const Eigen::VectorXd& x) {
  if (domain.kind() != DomainKind::kBall) {
    throw Error("ball barrier requires a ball domain");
  }
  double slack = domain.min_slack(x);
  if (slack <= kInteriorSlack) throw NotInteriorError(slack);

  Eigen::VectorXd u = x - domain.center();
  double s = domain.radius() * domain.radius() - u.squaredNorm();

  BarrierEval out;
  out.value = -std::log(s);
  out.gradient = (2.0 / s) * u;
  out.hessian = (2.0 / s) * Eigen::MatrixXd::Identity(x.size(), x.size()) +
                (4.0 / (s * s)) * (u * u.transpose());
  return out;
}

Barrier::Barrier(Domain domain, std::optional<double> diameter_override)
    : domain_(std::move(domain)) {
  switch (domain_.kind()) {
    case DomainKind::kBox:
      theta_ = 2.0 * domain_.dimension();
      break;
    case DomainKind::kBall:
      theta_ = 1.0;
      break;
    case DomainKind::kPolytope:
      theta_ = static_cast<double>(domain_.num_constraints());
      break;
  }
  diameter_ = diameter_override ? *diameter_override : dikin::diameter(domain_);
  if (!(diameter_ > 0.0) || !std::isfinite(diameter_)) {
    throw Error("barrier requires a positive finite diameter");
  }
}

BarrierEval Barrier::eval(const Eigen::VectorXd& x) const {
  if (domain_.kind() == DomainKind::kBall) return eval_ball_barrier(domain_, x);
  return eval_polytope_barrier(domain_, x);
}

double Barrier::value(const Eigen::VectorXd& x) const {
  double slack = domain_.min_slack(x);
  if (slack <= kInteriorSlack) throw NotInteriorError(slack);
  switch (domain_.kind()) {
    case DomainKind::kBox: {
      double v = 0.0;
      for (int i = 0; i < domain_.dimension(); ++i) {
        v -= std::log(x[i] - domain_.lower()[i]) +
             std::log(domain_.upper()[i] - x[i]);
      }
      return v;
    }
    case DomainKind::kBall: {
      Eigen::VectorXd u = x - domain_.center();
      return -std::log(domain_.radius() * domain_.radius() - u.squaredNorm());
    }
    case DomainKind::kPolytope: {
      Eigen::VectorXd s = domain_.constraint_matrix() * x - domain_.constraint_rhs();
      return -s.array().log().sum();
    }
  }
  return 0.0;
}

Eigen::VectorXd Barrier::gradient(const Eigen::VectorXd& x) const {
  return eval(x).gradient;
}

Eigen::VectorXd hessian_solve(const Eigen::MatrixXd& hessian,
                              const Eigen::VectorXd& g) {
  Eigen::LLT<Eigen::MatrixXd> llt(hessian);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefiniteError("Cholesky factorization failed");
  }
  Eigen::VectorXd v = llt.solve(g);
  const double tol = 1e-10 * (1.0 + g.norm());
  // One or two refinement sweeps; near-boundary Hessians are badly
  // conditioned and a single solve can miss the residual target.
  for (int i = 0; i < 2; ++i) {
    Eigen::VectorXd r = g - hessian * v;
    if (r.norm() <= tol) return v;
    v += llt.solve(r);
  }
  if ((g - hessian * v).norm() > tol) {
    throw NotPositiveDefiniteError("SPD solve could not reach the residual tolerance");
  }
  return v;
}

DerivativeReport check_derivatives(const Barrier& barrier,
                                   const Eigen::VectorXd& x, double h) {
  if (h < 1e-7 || h > 1e-3) throw Error("FD step must lie in [1e-7, 1e-3]");
  BarrierEval at_x = barrier.eval(x);  // throws NotInterior off the interior
  const int n = static_cast<int>(x.size());

  Eigen::VectorXd grad_fd(n);
  Eigen::MatrixXd hess_fd(n, n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    grad_fd[j] = (barrier.value(xp) - barrier.value(xm)) / (2.0 * h);
    hess_fd.col(j) = (barrier.eval(xp).gradient - barrier.eval(xm).gradient) / (2.0 * h);
  }

  DerivativeReport report;
  report.gradient_rel_error =
      (grad_fd - at_x.gradient).norm() / (1.0 + at_x.gradient.norm());
  report.hessian_rel_error =
      (hess_fd - at_x.hessian).norm() / (1.0 + at_x.hessian.norm());
  return report;
}

SelfConcordanceReport check_self_concordance(const Barrier& barrier,
                                             const Eigen::VectorXd& x,
                                             const Eigen::VectorXd& u,
                                             double theta) {
  if (std::abs(u.norm() - 1.0) > 1e-9) {
    throw NotUnitError("self-concordance check requires a unit direction");
  }
  BarrierEval at_x = barrier.eval(x);

  double f1 = u.dot(at_x.gradient);
  double f2 = u.dot(at_x.hessian * u);

  // Step for the FD third derivative, scaled to the boundary distance along
  // the test line so x +- t u stays well interior.
  double forward = ray_to_boundary(barrier.domain(), x, u);
  double backward = ray_to_boundary(barrier.domain(), x, -u);
  double t = 1e-4 * std::min(1.0, 0.45 * std::min(forward, backward));

  auto dir_curvature = [&](const Eigen::VectorXd& p) {
    return u.dot(barrier.eval(p).hessian * u);
  };
  double f3 = (dir_curvature(x + t * u) - dir_curvature(x - t * u)) / (2.0 * t);

  SelfConcordanceReport report;
  report.third_derivative_ratio = std::abs(f3) / (2.0 * std::pow(f2, 1.5));
  report.theta_ratio = f1 * f1 / (theta * f2);
  return report;
}

}  // namespace dikin

#include "dikin/learners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace dikin {

namespace {

TuningConstants finish_tuning(double D, double theta, double grad_bound,
                              double diam, int horizon) {
  TuningConstants t;
  t.theta = theta;
  t.grad_bound = grad_bound;
  t.diameter = diam;
  t.horizon = horizon;
  t.D = D;
  t.eta = D / (std::sqrt(10.0) * grad_bound * diam * std::sqrt(double(horizon)));
  if (t.eta * grad_bound * diam > 0.25) {
    t.eta = 0.25 / (grad_bound * diam);
    t.eta_clamped = true;
  }
  return t;
}

}  // namespace

TuningConstants tune_rate(double theta, double grad_bound, double diameter,
                          int horizon) {
  if (!(theta > 0.0) || !(grad_bound > 0.0) || !(diameter > 0.0) || horizon < 2) {
    throw Error("tune_rate requires positive inputs and horizon >= 2");
  }
  double D = std::sqrt(theta * std::log(double(horizon)) + grad_bound * diameter);
  return finish_tuning(D, theta, grad_bound, diameter, horizon);
}

TuningConstants tune_rate_with_divergence_bound(double D, double grad_bound,
                                                double diameter, int horizon,
                                                double theta) {
  if (!(D > 0.0) || !(grad_bound > 0.0) || !(diameter > 0.0) || horizon < 2) {
    throw Error("tuning requires positive inputs and horizon >= 2");
  }
  return finish_tuning(D, theta, grad_bound, diameter, horizon);
}

IpStepState ip_step(const IpStepState& state, const BarrierEval& at_x,
                    const Eigen::VectorXd& g, const Domain& domain) {
  IpStepState next = state;
  ++next.round;

  if (g.norm() > state.tuning.grad_bound * (1.0 + 1e-12)) {
    ++next.grad_bound_violations;
  }

  if (g.isZero(0.0)) {
    next.last_step_local_norm = 0.0;
    return next;
  }

  Eigen::VectorXd direction = -hessian_solve(at_x.hessian, g);
  // ||eta n||_x = eta sqrt(g' H^{-1} g); the step is valid iff this is < 1.
  double quad = std::max(g.dot(-direction), 0.0);
  double eta = state.tuning.eta;
  double step_norm = eta * std::sqrt(quad);

  if (step_norm >= 1.0 - 1e-9) {
    // Unreachable under a truthful gradient bound; shrink back to the middle
    // of the Dikin ellipsoid instead of stepping through its boundary.
    eta = 0.5 / std::sqrt(quad);
    step_norm = 0.5;
    ++next.unsafe_steps;
  }

  next.x = state.x + eta * direction;
  next.last_step_local_norm = step_norm;

  double slack = domain.min_slack(next.x);
  if (slack <= kInteriorSlack) throw NotInteriorError(slack);
  return next;
}

namespace {

Eigen::VectorXd project_polytope(const Domain& domain, const Eigen::VectorXd& y) {
  const Eigen::MatrixXd& A = domain.constraint_matrix();
  const Eigen::VectorXd& b = domain.constraint_rhs();
  const int m = static_cast<int>(A.rows());

  // Dykstra's cyclic projections onto the half-spaces a_i'x >= b_i converge
  // to the exact Euclidean projection onto their intersection.
  Eigen::VectorXd x = y;
  std::vector<Eigen::VectorXd> corrections(m, Eigen::VectorXd::Zero(y.size()));
  Eigen::VectorXd row_sq(m);
  for (int i = 0; i < m; ++i) row_sq[i] = A.row(i).squaredNorm();

  const double tol = 1e-12 * (1.0 + y.norm());
  for (int sweep = 0; sweep < 100000; ++sweep) {
    double max_change = 0.0;
    for (int i = 0; i < m; ++i) {
      Eigen::VectorXd z = x + corrections[i];
      double violation = b[i] - A.row(i).dot(z);
      Eigen::VectorXd projected =
          violation > 0.0 ? Eigen::VectorXd(z + (violation / row_sq[i]) * A.row(i).transpose())
                          : z;
      corrections[i] = z - projected;
      max_change = std::max(max_change, (projected - x).norm());
      x = std::move(projected);
    }
    if (max_change <= tol) break;
  }
  return x;
}

}  // namespace

Eigen::VectorXd project(const Domain& domain, const Eigen::VectorXd& y) {
  switch (domain.kind()) {
    case DomainKind::kBox: {
      Eigen::VectorXd x = y;
      for (int i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], domain.lower()[i], domain.upper()[i]);
      }
      return x;
    }
    case DomainKind::kBall: {
      Eigen::VectorXd d = y - domain.center();
      double norm = d.norm();
      if (norm <= domain.radius()) return y;
      return domain.center() + (domain.radius() / norm) * d;
    }
    case DomainKind::kPolytope:
      if (domain.contains(y, 0.0)) return y;
      return project_polytope(domain, y);
  }
  return y;
}

OgdState ogd_step(const OgdState& state, const Eigen::VectorXd& g,
                  const Domain& domain) {
  OgdState next = state;
  next.x = project(domain, state.x - state.eta * g);
  return next;
}

void FtlHistory::add(const LossFunction& f) {
  if (rounds == 0) {
    linear_sum = Eigen::VectorXd::Zero(f.dimension());
  }
  linear_sum += f.linear_coeff();
  if (f.kind() == LossKind::kQuadratic) {
    if (quadratic_sum.size() == 0) {
      quadratic_sum = Eigen::MatrixXd::Zero(f.dimension(), f.dimension());
    }
    quadratic_sum += f.quadratic_matrix();
  }
  last = f;
  ++rounds;
}

namespace {

// Sign rule per coordinate with two-stage tie-breaking: last-loss
// coefficient, then minimum norm.
Eigen::VectorXd ftl_linear_box(const Domain& domain, const Eigen::VectorXd& c,
                               const Eigen::VectorXd* last_c) {
  const int n = domain.dimension();
  const double tol = 1e-12 * std::max(1.0, c.cwiseAbs().maxCoeff());
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) {
    double ci = c[i];
    if (std::abs(ci) <= tol && last_c != nullptr) ci = (*last_c)[i];
    if (ci > tol) {
      x[i] = domain.lower()[i];
    } else if (ci < -tol) {
      x[i] = domain.upper()[i];
    } else {
      x[i] = std::clamp(0.0, domain.lower()[i], domain.upper()[i]);
    }
  }
  return x;
}

Eigen::VectorXd ftl_linear_ball(const Domain& domain, const Eigen::VectorXd& c,
                                const Eigen::VectorXd* last_c) {
  const double tol = 1e-12 * std::max(1.0, c.cwiseAbs().maxCoeff());
  Eigen::VectorXd dir = c;
  if (dir.norm() <= tol && last_c != nullptr) dir = *last_c;
  if (dir.norm() > tol) {
    return domain.center() - (domain.radius() / dir.norm()) * dir;
  }
  // Everything ties: minimum-norm point of the ball.
  double cn = domain.center().norm();
  if (cn <= domain.radius()) return Eigen::VectorXd::Zero(domain.dimension());
  return domain.center() * (1.0 - domain.radius() / cn);
}

Eigen::VectorXd ftl_linear_polytope(const Domain& domain, const Eigen::VectorXd& c,
                                    const Eigen::VectorXd* last_c) {
  auto vertices = polytope_vertices(domain);
  if (vertices.empty()) throw Error("polytope has no vertices");
  const Eigen::VectorXd* best = nullptr;
  auto better = [&](const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
    double scale = 1.0 + std::max(v.norm(), w.norm());
    double dv = c.dot(v), dw = c.dot(w);
    if (dv < dw - 1e-9 * scale) return true;
    if (dv > dw + 1e-9 * scale) return false;
    if (last_c != nullptr) {
      double lv = last_c->dot(v), lw = last_c->dot(w);
      if (lv < lw - 1e-9 * scale) return true;
      if (lv > lw + 1e-9 * scale) return false;
    }
    return v.norm() < w.norm();
  };
  for (const auto& v : vertices) {
    if (best == nullptr || better(v, *best)) best = &v;
  }
  return *best;
}

Eigen::VectorXd ftl_quadratic(const FtlHistory& history, const Domain& domain) {
  const Eigen::MatrixXd& Q = history.quadratic_sum;
  const Eigen::VectorXd& c = history.linear_sum;

  // Min-norm unconstrained minimizer; exact whenever it is feasible.
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(Q);
  Eigen::VectorXd x = cod.solve(-c);
  if ((Q * x + c).norm() <= 1e-10 * (1.0 + c.norm()) && domain.contains(x, 1e-12)) {
    return x;
  }

  // Constrained case: projected gradient with step 1/L.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Q);
  double L = eig.eigenvalues().maxCoeff();
  if (L <= 0.0) throw Error("quadratic FTL objective has no curvature");
  x = project(domain, x);
  const double tol = 1e-10 * (1.0 + x.norm());
  for (int iter = 0; iter < 100000; ++iter) {
    Eigen::VectorXd next = project(domain, x - (1.0 / L) * (Q * x + c));
    double change = (next - x).norm();
    x = std::move(next);
    if (change <= tol) break;
  }
  return x;
}

}  // namespace

Eigen::VectorXd ftl_step(const FtlHistory& history, const Domain& domain) {
  if (history.rounds == 0) throw Error("FTL requires a non-empty history");
  if (history.has_quadratic()) return ftl_quadratic(history, domain);

  const Eigen::VectorXd* last_c = nullptr;
  Eigen::VectorXd last_storage;
  if (history.last && history.last->kind() == LossKind::kLinear) {
    last_storage = history.last->linear_coeff();
    last_c = &last_storage;
  }

  switch (domain.kind()) {
    case DomainKind::kBox:
      return ftl_linear_box(domain, history.linear_sum, last_c);
    case DomainKind::kBall:
      return ftl_linear_ball(domain, history.linear_sum, last_c);
    case DomainKind::kPolytope:
      return ftl_linear_polytope(domain, history.linear_sum, last_c);
  }
  throw Error("unknown domain kind");
}

IpLearner::IpLearner(std::string name, const Barrier& barrier,
                     TuningConstants tuning, Eigen::VectorXd x1)
    : name_(std::move(name)), barrier_(barrier) {
  double slack = barrier_.domain().min_slack(x1);
  if (slack <= kInteriorSlack) throw NotInteriorError(slack);
  state_.x = std::move(x1);
  state_.tuning = tuning;
}

void IpLearner::observe(const LossFunction& loss) {
  Eigen::VectorXd g = loss.grad(state_.x);
  BarrierEval at_x = barrier_.eval(state_.x);
  state_ = ip_step(state_, at_x, g, barrier_.domain());
}

DoublingIpLearner::DoublingIpLearner(std::string name, const Barrier& barrier,
                                     Eigen::VectorXd x1, double g0, double theta,
                                     double diameter, int horizon)
    : IpLearner(std::move(name), barrier,
                tune_rate(theta, g0, diameter, horizon), std::move(x1)) {
  if (!(g0 > 0.0)) throw Error("doubling wrapper requires G0 > 0");
  epoch_starts_.push_back(1);
}

void DoublingIpLearner::observe(const LossFunction& loss) {
  Eigen::VectorXd g = loss.grad(state_.x);
  double norm = g.norm();
  // Same 1-ulp tolerance as the step's violation accounting, so a gradient
  // sitting exactly on the declared bound does not trigger a spurious epoch.
  if (norm > state_.tuning.grad_bound * (1.0 + 1e-12)) {
    double bound = state_.tuning.grad_bound;
    while (bound * (1.0 + 1e-12) < norm) bound *= 2.0;
    state_.tuning = tune_rate(state_.tuning.theta, bound,
                              state_.tuning.diameter, state_.tuning.horizon);
    if (epoch_starts_.back() != state_.round + 1) {
      epoch_starts_.push_back(state_.round + 1);
    }
  }
  BarrierEval at_x = barrier_.eval(state_.x);
  state_ = ip_step(state_, at_x, g, barrier_.domain());
}

OgdLearner::OgdLearner(std::string name, const Domain& domain, double eta,
                       Eigen::VectorXd x1)
    : name_(std::move(name)), domain_(domain) {
  if (!domain.contains(x1, 1e-12)) throw Error("OGD start must be feasible");
  state_.x = std::move(x1);
  state_.eta = eta;
}

void OgdLearner::observe(const LossFunction& loss) {
  state_ = ogd_step(state_, loss.grad(state_.x), domain_);
}

FtlLearner::FtlLearner(std::string name, const Domain& domain, Eigen::VectorXd x1)
    : name_(std::move(name)), domain_(domain), x_(std::move(x1)) {
  if (!domain.contains(x_, 1e-12)) throw Error("FTL start must be feasible");
}

void FtlLearner::observe(const LossFunction& loss) {
  history_.add(loss);
  x_ = ftl_step(history_, domain_);
}

}  // namespace dikin

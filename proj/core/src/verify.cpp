#include "dikin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "dikin/barrier.hpp"
#include "dikin/geometry.hpp"
#include "dikin/harness.hpp"
#include "dikin/learners.hpp"
#include "dikin/losses.hpp"
#include "dikin/rng.hpp"

namespace dikin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct NamedDomain {
  std::string name;
  Domain domain;
};

// Fixed test domains: 1-D and 2-D boxes, a 2-D ball, and a bounded 2-D
// polytope with six constraints around the origin.
std::vector<NamedDomain> test_domains() {
  std::vector<NamedDomain> domains;
  domains.push_back({"box1d", Domain::box(Eigen::VectorXd::Constant(1, -1.0),
                                          Eigen::VectorXd::Constant(1, 1.0))});
  domains.push_back({"box2d", Domain::box(Eigen::VectorXd::Constant(2, -1.0),
                                          Eigen::VectorXd::Constant(2, 1.0))});
  Eigen::VectorXd center = Eigen::VectorXd::Zero(2);
  domains.push_back({"ball2d", Domain::ball(center, 1.0)});

  Eigen::MatrixXd A(6, 2);
  Eigen::VectorXd b = Eigen::VectorXd::Constant(6, -1.0);
  for (int i = 0; i < 6; ++i) {
    double angle = 2.0 * M_PI * i / 6.0 + 0.37;
    A(i, 0) = -std::cos(angle);
    A(i, 1) = -std::sin(angle);
  }
  domains.push_back(
      {"polytope2d", Domain::polytope(A, b, Eigen::VectorXd::Zero(2))});
  return domains;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(4) << std::scientific << v;
  return os.str();
}

// --- individual rows -------------------------------------------------------

PropertyCheck check_derivative_consistency(const NamedDomain& nd, int points,
                                           Rng& rng, double gradient_scale) {
  PropertyCheck row;
  row.name = "barrier_derivatives/" + nd.name;
  row.samples = points;
  Barrier barrier(nd.domain);
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    Eigen::VectorXd x = sample_interior(nd.domain, rng, 0.1);
    if (gradient_scale == 1.0) {
      DerivativeReport rep = check_derivatives(barrier, x, 1e-5);
      worst = std::max({worst, rep.gradient_rel_error, rep.hessian_rel_error});
    } else {
      // Fault-injection path: compare the FD gradient against a corrupted
      // analytic gradient.
      BarrierEval ev = barrier.eval(x);
      const double h = 1e-5;
      Eigen::VectorXd grad_fd(x.size());
      for (int j = 0; j < x.size(); ++j) {
        Eigen::VectorXd xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        grad_fd[j] = (barrier.value(xp) - barrier.value(xm)) / (2.0 * h);
      }
      Eigen::VectorXd corrupted = gradient_scale * ev.gradient;
      worst = std::max(worst,
                       (grad_fd - corrupted).norm() / (1.0 + corrupted.norm()));
    }
  }
  row.worst_slack = 1e-5 - worst;
  row.passed = row.worst_slack >= 0.0;
  row.detail = "max rel err " + fmt(worst);
  return row;
}

PropertyCheck check_self_concordance_row(const NamedDomain& nd, int pairs,
                                         Rng& rng) {
  PropertyCheck row;
  row.name = "self_concordance/" + nd.name;
  row.samples = pairs;
  Barrier barrier(nd.domain);
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    Eigen::VectorXd x = sample_interior(nd.domain, rng, 0.02);
    Eigen::VectorXd u = rng.unit_sphere(nd.domain.dimension());
    SelfConcordanceReport rep =
        check_self_concordance(barrier, x, u, barrier.theta());
    worst = std::max({worst, rep.third_derivative_ratio, rep.theta_ratio});
  }
  row.worst_slack = 1.0 + 1e-4 - worst;
  row.passed = row.worst_slack >= 0.0;
  row.detail = "max ratio " + fmt(worst);
  return row;
}

// Eigenvalue floor and inverse ceiling on the domains with exact diameter.
void check_eigen_bounds(std::vector<PropertyCheck>& rows, int points, Rng& rng) {
  PropertyCheck floor_row, ceil_row;
  floor_row.name = "hessian_eigen_floor";
  ceil_row.name = "inverse_hessian_ceiling";
  floor_row.worst_slack = kInf;
  ceil_row.worst_slack = kInf;
  for (const auto& nd : test_domains()) {
    if (nd.domain.kind() == DomainKind::kPolytope) continue;  // inexact diam
    Barrier barrier(nd.domain);
    double inv_d2 = 1.0 / (barrier.diameter() * barrier.diameter());
    double d2 = barrier.diameter() * barrier.diameter();
    for (int i = 0; i < points; ++i) {
      Eigen::VectorXd x = sample_interior(nd.domain, rng, 1e-4);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(barrier.eval(x).hessian);
      double min_eig = eig.eigenvalues().minCoeff();
      floor_row.worst_slack = std::min(floor_row.worst_slack, min_eig - inv_d2);
      ceil_row.worst_slack = std::min(ceil_row.worst_slack, d2 - 1.0 / min_eig);
      floor_row.samples++;
      ceil_row.samples++;
    }
  }
  floor_row.passed = floor_row.worst_slack >= -1e-9;
  ceil_row.passed = ceil_row.worst_slack >= -1e-9;
  floor_row.detail = "min eig - 1/diam^2";
  ceil_row.detail = "diam^2 - max eig of inverse";
  rows.push_back(floor_row);
  rows.push_back(ceil_row);
}

PropertyCheck check_dikin_containment(int pairs, Rng& rng) {
  PropertyCheck row;
  row.name = "dikin_containment";
  row.worst_slack = kInf;
  for (const auto& nd : test_domains()) {
    Barrier barrier(nd.domain);
    for (int i = 0; i < pairs; ++i) {
      Eigen::VectorXd x = sample_interior(nd.domain, rng, 1e-3);
      BarrierEval ev = barrier.eval(x);
      Eigen::LLT<Eigen::MatrixXd> llt(ev.hessian);
      Eigen::VectorXd z =
          rng.unit_sphere(nd.domain.dimension()) *
          std::pow(rng.uniform(0.0, 1.0), 1.0 / nd.domain.dimension()) *
          (1.0 - 1e-6);
      Eigen::VectorXd h =
          Eigen::MatrixXd(llt.matrixL()).transpose().triangularView<Eigen::Upper>().solve(z);
      RegionSample sample = region_sample(nd.domain, ev, x, h);
      row.worst_slack = std::min(row.worst_slack, sample.min_slack);
      row.samples++;
    }
  }
  row.passed = row.worst_slack > 0.0;
  row.detail = "min slack of x+h over ||h||_x < 1";
  return row;
}

PropertyCheck check_hessian_sandwich(int pairs, Rng& rng) {
  PropertyCheck row;
  row.name = "hessian_sandwich";
  row.worst_slack = kInf;
  bool all_interior = true;
  for (const auto& nd : test_domains()) {
    Barrier barrier(nd.domain);
    int centers = std::max(1, pairs / 100);
    for (int c = 0; c < centers; ++c) {
      Eigen::VectorXd x = sample_interior(nd.domain, rng, 0.01);
      DikinHessianReport rep =
          verify_dikin_and_hessian_bounds(barrier, x, 100, rng);
      row.worst_slack = std::min(row.worst_slack, rep.worst_sandwich_slack);
      all_interior = all_interior && rep.all_interior;
      row.samples += rep.samples;
    }
  }
  row.passed = all_interior && row.worst_slack >= -1e-8;
  row.detail = "whitened eigenvalue margin";
  return row;
}

void check_boundary_growth_rows(std::vector<PropertyCheck>& rows, int count,
                                Rng& rng) {
  PropertyCheck grad_row, growth_row, inner_row;
  grad_row.name = "boundary_gradient_bound";
  growth_row.name = "boundary_log_growth";
  inner_row.name = "inner_subset_growth";
  grad_row.worst_slack = kInf;
  growth_row.worst_slack = kInf;
  inner_row.worst_slack = kInf;
  const double deltas[] = {1.0, 0.1, 1e-3};
  for (const auto& nd : test_domains()) {
    Barrier barrier(nd.domain);
    for (int i = 0; i < count; ++i) {
      Eigen::VectorXd x = sample_interior(nd.domain, rng, 0.02);
      Eigen::VectorXd u = rng.unit_sphere(nd.domain.dimension());
      double delta = deltas[i % 3];
      BoundaryReport rep =
          verify_boundary_growth(barrier, x, u, barrier.theta(), delta);
      if (rep.gradient_check_applicable) {
        grad_row.worst_slack = std::min(grad_row.worst_slack, rep.gradient_slack);
        grad_row.samples++;
      }
      growth_row.worst_slack = std::min(growth_row.worst_slack, rep.growth_slack);
      inner_row.worst_slack =
          std::min(inner_row.worst_slack, rep.inner_subset_slack);
      growth_row.samples++;
      inner_row.samples++;
    }
  }
  grad_row.passed = grad_row.worst_slack >= -1e-8;
  growth_row.passed = growth_row.worst_slack >= -1e-8;
  inner_row.passed = inner_row.worst_slack >= -1e-8;
  grad_row.detail = "theta/t_max - u'grad R";
  growth_row.detail = "log bound at 0.9 t_max";
  inner_row.detail = "log(1+1/delta) theta margin";
  rows.push_back(grad_row);
  rows.push_back(growth_row);
  rows.push_back(inner_row);
}

// The barrier value must diverge along every ray into the boundary: strictly
// increasing tail samples, witnessed blow-up at slack ~1e-11.
PropertyCheck check_barrier_blowup(int rays, Rng& rng) {
  PropertyCheck row;
  row.name = "barrier_boundary_blowup";
  row.passed = true;
  row.worst_slack = kInf;
  for (const auto& nd : test_domains()) {
    Barrier barrier(nd.domain);
    for (int r = 0; r < rays; ++r) {
      Eigen::VectorXd x = sample_interior(nd.domain, rng, 0.3);
      Eigen::VectorXd u = rng.unit_sphere(nd.domain.dimension());
      double t_max = ray_to_boundary(nd.domain, x, u);
      // Distances to the boundary shrink geometrically to ~1e-10.
      std::vector<double> values;
      double base = barrier.value(x);
      for (double dist = 0.5 * t_max; dist > 1e-10; dist *= 0.2) {
        values.push_back(barrier.value(x + (t_max - dist) * u));
      }
      for (std::size_t k = values.size() >= 10 ? values.size() - 10 : 0;
           k + 1 < values.size(); ++k) {
        if (!(values[k + 1] > values[k])) row.passed = false;
      }
      double rise = values.back() - base;
      row.worst_slack = std::min(row.worst_slack, rise - 10.0);
      row.samples++;
    }
  }
  row.passed = row.passed && row.worst_slack >= 0.0;
  row.detail = "monotone tail, rise above 10 at slack ~1e-10";
  return row;
}

void check_bregman_rows(std::vector<PropertyCheck>& rows, int count, Rng& rng) {
  PropertyCheck nonneg, three_point;
  nonneg.name = "bregman_nonneg_identity";
  three_point.name = "bregman_three_point";
  nonneg.worst_slack = kInf;
  three_point.worst_slack = kInf;
  nonneg.passed = true;
  for (const auto& nd : test_domains()) {
    Barrier barrier(nd.domain);
    for (int i = 0; i < count; ++i) {
      Eigen::VectorXd x = sample_interior(nd.domain, rng, 0.02);
      Eigen::VectorXd y = sample_interior(nd.domain, rng, 0.02);
      Eigen::VectorXd z = sample_interior(nd.domain, rng, 0.02);

      double bxy = bregman_divergence(barrier, x, y);
      nonneg.worst_slack = std::min(nonneg.worst_slack, bxy);
      if ((x - y).norm() > 1e-9 && !(bxy > 1e-12)) nonneg.passed = false;
      if (bregman_divergence(barrier, x, x) > 1e-12) nonneg.passed = false;

      double identity = bregman_divergence(barrier, x, y) -
                        bregman_divergence(barrier, x, z) +
                        bregman_divergence(barrier, y, z) -
                        (x - y).dot(barrier.gradient(z) - barrier.gradient(y));
      three_point.worst_slack =
          std::min(three_point.worst_slack, 1e-9 - std::abs(identity));
      nonneg.samples++;
      three_point.samples++;
    }
  }
  nonneg.passed = nonneg.passed && nonneg.worst_slack >= 0.0;
  three_point.passed = three_point.worst_slack >= 0.0;
  nonneg.detail = "B >= 0, zero iff x == y";
  three_point.detail = "three-point identity residual";
  rows.push_back(nonneg);
  rows.push_back(three_point);
}

PropertyCheck check_comparator_shift(int count, Rng& rng) {
  PropertyCheck row;
  row.name = "comparator_shift";
  row.worst_slack = kInf;
  row.passed = true;
  for (const auto& nd : test_domains()) {
    double diam = diameter(nd.domain);
    for (int i = 0; i < count; ++i) {
      Eigen::VectorXd x1 = sample_interior(nd.domain, rng, 0.05);
      // Mix interior comparators with boundary ones.
      Eigen::VectorXd x_star;
      if (i % 2 == 0) {
        x_star = sample_interior(nd.domain, rng, 0.0);
      } else {
        Eigen::VectorXd u = rng.unit_sphere(nd.domain.dimension());
        x_star = x1 + ray_to_boundary(nd.domain, x1, u) * u;
      }
      double delta = std::pow(10.0, rng.uniform(-3.0, 0.0));
      Eigen::VectorXd shifted = comparator_shift(nd.domain, x1, x_star, delta);
      if (!nd.domain.is_interior(shifted)) row.passed = false;
      if (!in_inner_subset(nd.domain, x1, shifted, delta)) row.passed = false;
      row.worst_slack = std::min(
          row.worst_slack, delta * diam - (shifted - x_star).norm());
      row.samples++;
    }
  }
  row.passed = row.passed && row.worst_slack > 0.0;
  row.detail = "displacement below delta * diam; inner-subset membership";
  return row;
}

PropertyCheck check_projection(int count, Rng& rng) {
  PropertyCheck row;
  row.name = "projection_variational";
  row.worst_slack = kInf;
  for (const auto& nd : test_domains()) {
    double diam = diameter(nd.domain);
    for (int i = 0; i < count; ++i) {
      Eigen::VectorXd y =
          sample_interior(nd.domain, rng, 0.0) +
          rng.uniform(0.0, 2.0) * diam * rng.unit_sphere(nd.domain.dimension());
      Eigen::VectorXd p = project(nd.domain, y);
      if (!nd.domain.contains(p, 1e-9)) {
        row.worst_slack = -kInf;
        continue;
      }
      for (int k = 0; k < 10; ++k) {
        Eigen::VectorXd x = sample_interior(nd.domain, rng, 0.0);
        row.worst_slack =
            std::min(row.worst_slack, 1e-8 - (y - p).dot(x - p));
      }
      row.samples++;
    }
  }
  row.passed = row.worst_slack >= 0.0;
  row.detail = "(y-p)'(x-p) <= 1e-8 for feasible x";
  return row;
}

void check_losses_rows(std::vector<PropertyCheck>& rows, int count, Rng& rng) {
  PropertyCheck convexity, grad_fd;
  convexity.name = "loss_convexity";
  grad_fd.name = "loss_gradient_fd";
  convexity.worst_slack = kInf;
  grad_fd.worst_slack = kInf;

  Domain box = Domain::box(Eigen::VectorXd::Constant(2, -1.0),
                           Eigen::VectorXd::Constant(2, 1.0));
  std::vector<LossFunction> losses;
  losses.push_back(LossFunction::linear(rng.gaussian(2)));
  Eigen::MatrixXd M = rng.gaussian(2) * rng.gaussian(2).transpose();
  losses.push_back(LossFunction::quadratic(M.transpose() * M + M * M.transpose(),
                                           rng.gaussian(2), box));

  for (const auto& f : losses) {
    for (int i = 0; i < count; ++i) {
      Eigen::VectorXd x = sample_interior(box, rng, 0.0);
      Eigen::VectorXd y = sample_interior(box, rng, 0.0);
      double lambda = rng.uniform(0.0, 1.0);
      double combo = f.eval(lambda * x + (1.0 - lambda) * y);
      double chord = lambda * f.eval(x) + (1.0 - lambda) * f.eval(y);
      convexity.worst_slack =
          std::min(convexity.worst_slack, chord + 1e-10 - combo);
      convexity.samples++;

      const double h = 1e-6;
      Eigen::VectorXd g = f.grad(x);
      Eigen::VectorXd fd(x.size());
      for (int j = 0; j < x.size(); ++j) {
        Eigen::VectorXd xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        fd[j] = (f.eval(xp) - f.eval(xm)) / (2.0 * h);
      }
      grad_fd.worst_slack = std::min(
          grad_fd.worst_slack, 1e-6 - (fd - g).norm() / (1.0 + g.norm()));
      grad_fd.samples++;
    }
  }
  convexity.passed = convexity.worst_slack >= 0.0;
  grad_fd.passed = grad_fd.worst_slack >= 0.0;
  convexity.detail = "chord test, tolerance 1e-10";
  grad_fd.detail = "rel err vs central differences";
  rows.push_back(convexity);
  rows.push_back(grad_fd);
}

// An IP run on the 2-D box with an iid linear adversary provides the
// trajectory rows: step validity and both per-round inequalities.
void check_trajectory_rows(std::vector<PropertyCheck>& rows, int horizon,
                           Rng& rng) {
  ExperimentConfig config;
  config.domain = Domain::box(Eigen::VectorXd::Constant(2, -1.0),
                              Eigen::VectorXd::Constant(2, 1.0));
  config.horizon = std::max(horizon, 64);
  config.seed = rng.engine()();
  config.adversary =
      AdversaryScript::iid_linear(config.horizon, config.seed, 1.0);
  config.learners.push_back({.kind = "ip"});

  Barrier barrier(config.domain);
  auto traces = run_experiment(config);
  const Trace& trace = traces.at("ip");
  std::vector<LossFunction> losses = config.adversary.generate(config.domain);

  PropertyCheck validity;
  validity.name = "ip_step_validity";
  validity.samples = trace.rounds();
  double min_slack = trace.min_slacks.minCoeff();
  double worst_norm_margin = kInf;
  const double eta_gd = trace.tuning.eta * trace.tuning.grad_bound *
                        trace.tuning.diameter;
  for (int t = 0; t < trace.rounds(); ++t) {
    worst_norm_margin = std::min(
        worst_norm_margin, eta_gd + 1e-9 - trace.local_step_norms[t]);
  }
  validity.worst_slack = std::min(min_slack, worst_norm_margin);
  validity.passed = min_slack > 0.0 && worst_norm_margin >= 0.0 &&
                    trace.local_step_norms.maxCoeff() < 1.0 &&
                    trace.unsafe_steps == 0;
  validity.detail = "interior slack and step norm <= eta G diam";
  rows.push_back(validity);

  Eigen::VectorXd comparator = Eigen::VectorXd::Constant(2, 0.25);
  TrajectoryReport rep = verify_trajectory_inequalities(
      trace, losses, barrier, comparator, trace.tuning);

  PropertyCheck lin, breg;
  lin.name = "trajectory_linearized_bound";
  lin.samples = rep.rounds;
  lin.worst_slack = rep.worst_linearized_slack;
  lin.passed = rep.worst_linearized_slack >= -1e-8;
  lin.detail = "eta g'(x_t - x*) vs gradient-change term + 8 G^2 diam^2 eta^2";
  breg.name = "trajectory_divergence_step";
  breg.samples = rep.rounds;
  breg.worst_slack = rep.worst_bregman_slack;
  breg.passed = rep.worst_bregman_slack >= -1e-9;
  breg.detail = "B_R(x_t, x_{t+1}) <= 2 eta^2 G^2 diam^2";
  rows.push_back(lin);
  rows.push_back(breg);
}

PropertyCheck check_ftl_alternation() {
  PropertyCheck row;
  row.name = "ftl_alternation";
  ExperimentConfig config;
  config.domain = Domain::box(Eigen::VectorXd::Constant(1, -1.0),
                              Eigen::VectorXd::Constant(1, 1.0));
  config.horizon = 64;
  config.adversary = AdversaryScript::alternating(config.horizon);
  config.learners.push_back({.kind = "ftl"});
  config.x1 = Eigen::VectorXd::Zero(1);

  auto traces = run_experiment(config);
  const Trace& trace = traces.at("ftl");
  row.samples = trace.rounds();
  row.passed = true;
  // From round 2 on, the iterates alternate -1, +1, -1, ...
  for (int t = 2; t <= trace.rounds(); ++t) {
    double expected = (t % 2 == 0) ? -1.0 : 1.0;
    if (std::abs(trace.iterate(t)[0] - expected) > 1e-12) row.passed = false;
  }
  row.worst_slack = row.passed ? 0.0 : -1.0;
  row.detail = "iterates alternate -1/+1 from round 2";
  return row;
}

PropertyCheck check_hindsight_oracle(int count, Rng& rng) {
  PropertyCheck row;
  row.name = "hindsight_oracle_consistency";
  row.worst_slack = kInf;
  Domain box = Domain::box(Eigen::VectorXd::Constant(2, -1.0),
                           Eigen::VectorXd::Constant(2, 1.0));
  for (int i = 0; i < count; ++i) {
    std::vector<LossFunction> losses;
    int rounds_count = 3 + int(rng.uniform(0.0, 5.0));
    for (int t = 0; t < rounds_count; ++t) {
      losses.push_back(LossFunction::linear(rng.gaussian(2)));
    }
    Eigen::VectorXd exact = hindsight_optimum(losses, box);
    Eigen::VectorXd grid = hindsight_optimum_grid(losses, box);
    double v_exact = 0.0, v_grid = 0.0;
    for (const auto& f : losses) {
      v_exact += f.eval(exact);
      v_grid += f.eval(grid);
    }
    row.worst_slack = std::min(row.worst_slack, 1e-6 - std::abs(v_exact - v_grid));
    row.samples++;
  }
  row.passed = row.worst_slack >= 0.0;
  row.detail = "sign-rule optimum vs grid oracle value";
  return row;
}

}  // namespace

std::vector<PropertyCheck> run_verification_suite(const VerifyOptions& options) {
  const int base = std::max(1, options.samples);
  Rng rng(options.seed);

  std::vector<PropertyCheck> rows;
  for (const auto& nd : test_domains()) {
    rows.push_back(check_derivative_consistency(nd, std::max(1, base / 10), rng,
                                                options.gradient_scale));
  }
  for (const auto& nd : test_domains()) {
    rows.push_back(check_self_concordance_row(nd, base, rng));
  }
  check_eigen_bounds(rows, base, rng);
  rows.push_back(check_dikin_containment(10 * base, rng));
  rows.push_back(check_hessian_sandwich(base, rng));
  check_boundary_growth_rows(rows, std::max(1, base / 4), rng);
  rows.push_back(check_barrier_blowup(std::max(1, base / 100), rng));
  check_bregman_rows(rows, std::max(1, base / 4), rng);
  rows.push_back(check_comparator_shift(std::max(1, base / 4), rng));
  rows.push_back(check_projection(std::max(1, base / 10), rng));
  check_losses_rows(rows, std::max(1, base / 10), rng);
  check_trajectory_rows(rows, std::min(512, base), rng);
  rows.push_back(check_ftl_alternation());
  rows.push_back(check_hindsight_oracle(std::max(1, base / 50), rng));
  return rows;
}

void print_property_table(std::ostream& out,
                          const std::vector<PropertyCheck>& checks) {
  std::size_t width = 12;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "property"
      << std::setw(8) << "status" << std::setw(14) << "worst_slack"
      << std::setw(10) << "samples" << "detail\n";
  for (const auto& c : checks) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << c.name
        << std::setw(8) << (c.passed ? "PASS" : "FAIL") << std::setw(14)
        << fmt(c.worst_slack) << std::setw(10) << c.samples << c.detail
        << "\n";
  }
}

bool all_passed(const std::vector<PropertyCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PropertyCheck& c) { return c.passed; });
}

}  // namespace dikin

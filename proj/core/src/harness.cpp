#include "dikin/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include <Eigen/Dense>

#include "dikin/geometry.hpp"

namespace dikin {

namespace {

Eigen::VectorXd starting_point(const ExperimentConfig& config) {
  Eigen::VectorXd x1 = config.x1 ? *config.x1 : config.domain.interior_point();
  if (x1.size() != config.domain.dimension()) {
    throw Error("x1 has wrong dimension");
  }
  return x1;
}

std::string unique_label(const LearnerSpec& spec,
                         const std::map<std::string, int>& used) {
  std::string label = spec.label.empty() ? spec.kind : spec.label;
  auto it = used.find(label);
  if (it != used.end()) label += "_" + std::to_string(it->second + 1);
  return label;
}

}  // namespace

std::vector<std::unique_ptr<Learner>> make_learners(
    const ExperimentConfig& config, const Barrier& barrier,
    const std::vector<LossFunction>& losses) {
  const double G_script = grad_bound(losses);
  const double diam = barrier.diameter();
  const int T = config.horizon;
  Eigen::VectorXd x1 = starting_point(config);

  std::vector<LearnerSpec> specs = config.learners;
  if (specs.empty()) specs.push_back({.kind = "ip"});

  std::vector<std::unique_ptr<Learner>> learners;
  std::map<std::string, int> used;
  for (const auto& spec : specs) {
    const double G = spec.grad_bound.value_or(G_script);
    if (!(G > 0.0)) throw Error("learner requires a positive gradient bound");
    std::string label = unique_label(spec, used);
    ++used[spec.label.empty() ? spec.kind : spec.label];

    if (spec.kind == "ip") {
      TuningConstants tuning =
          spec.divergence_bound
              ? tune_rate_with_divergence_bound(*spec.divergence_bound, G, diam,
                                                T, barrier.theta())
              : tune_rate(barrier.theta(), G, diam, T);
      if (spec.eta) {
        tuning.eta = *spec.eta;
        tuning.eta_clamped = false;
      }
      learners.push_back(
          std::make_unique<IpLearner>(label, barrier, tuning, x1));
    } else if (spec.kind == "ip_doubling") {
      learners.push_back(std::make_unique<DoublingIpLearner>(
          label, barrier, x1, spec.g0.value_or(1.0), barrier.theta(), diam, T));
    } else if (spec.kind == "ogd") {
      double eta = spec.eta.value_or(diam / (G * std::sqrt(double(T))));
      learners.push_back(
          std::make_unique<OgdLearner>(label, config.domain, eta, x1));
    } else if (spec.kind == "ftl") {
      learners.push_back(std::make_unique<FtlLearner>(label, config.domain, x1));
    } else {
      throw ConfigParseError("learner.kind", "unknown learner '" + spec.kind + "'");
    }
  }
  return learners;
}

std::map<std::string, Trace> run_experiment(const ExperimentConfig& config) {
  if (config.horizon < 2) throw Error("experiment horizon must be >= 2");
  Barrier barrier(config.domain, config.diameter_override);
  std::vector<LossFunction> losses = config.adversary.generate(config.domain);
  if (static_cast<int>(losses.size()) != config.horizon) {
    throw LengthMismatchError("adversary emitted " +
                              std::to_string(losses.size()) + " losses for horizon " +
                              std::to_string(config.horizon));
  }

  auto learners = make_learners(config, barrier, losses);
  const int T = config.horizon;
  const int n = config.domain.dimension();

  std::map<std::string, Trace> traces;
  for (auto& learner : learners) {
    Trace trace;
    trace.learner = learner->name();
    trace.iterates.resize(T + 1, n);
    trace.losses.resize(T);
    trace.grad_norms.resize(T);
    trace.min_slacks.resize(T);
    trace.local_step_norms.resize(T);

    auto t0 = std::chrono::steady_clock::now();
    for (int t = 0; t < T; ++t) {
      const Eigen::VectorXd& x = learner->current();
      trace.iterates.row(t) = x;
      trace.losses[t] = losses[t].eval(x);
      trace.grad_norms[t] = losses[t].grad(x).norm();
      trace.min_slacks[t] = config.domain.min_slack(x);
      try {
        learner->observe(losses[t]);
      } catch (const NotInteriorError& e) {
        throw NotInteriorError(e.min_slack(),
                               learner->name() + " aborted at round " +
                                   std::to_string(t + 1));
      }
      trace.local_step_norms[t] = learner->last_step_local_norm();
    }
    trace.iterates.row(T) = learner->current();
    trace.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    if (auto* ip = dynamic_cast<const IpLearner*>(learner.get())) {
      trace.is_ip = true;
      trace.kind = "ip";
      trace.tuning = ip->tuning();
      trace.unsafe_steps = ip->state().unsafe_steps;
      trace.grad_bound_violations = ip->state().grad_bound_violations;
      if (auto* dbl = dynamic_cast<const DoublingIpLearner*>(learner.get())) {
        trace.kind = "ip_doubling";
        trace.epoch_starts = dbl->epoch_starts();
      }
    } else {
      trace.kind = dynamic_cast<const FtlLearner*>(learner.get()) ? "ftl" : "ogd";
    }
    traces.emplace(learner->name(), std::move(trace));
  }
  return traces;
}

namespace {

bool all_linear(const std::vector<LossFunction>& losses) {
  return std::all_of(losses.begin(), losses.end(), [](const LossFunction& f) {
    return f.kind() == LossKind::kLinear;
  });
}

double total_loss(const std::vector<LossFunction>& losses,
                  const Eigen::VectorXd& x) {
  double v = 0.0;
  for (const auto& f : losses) v += f.eval(x);
  return v;
}

// Axis-aligned bounding box of the domain for the grid oracle.
void bounding_box(const Domain& domain, Eigen::VectorXd& lo, Eigen::VectorXd& hi) {
  const int n = domain.dimension();
  lo.resize(n);
  hi.resize(n);
  switch (domain.kind()) {
    case DomainKind::kBox:
      lo = domain.lower();
      hi = domain.upper();
      return;
    case DomainKind::kBall:
      lo = domain.center().array() - domain.radius();
      hi = domain.center().array() + domain.radius();
      return;
    case DomainKind::kPolytope: {
      auto vertices = polytope_vertices(domain);
      if (vertices.empty()) throw UnsupportedCompositionError("empty polytope");
      lo = vertices.front();
      hi = vertices.front();
      for (const auto& v : vertices) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
      }
      return;
    }
  }
}

}  // namespace

Eigen::VectorXd hindsight_optimum_grid(const std::vector<LossFunction>& losses,
                                       const Domain& domain, long min_points) {
  const int n = domain.dimension();
  if (n > 3) {
    throw UnsupportedCompositionError("grid oracle limited to n <= 3");
  }
  Eigen::VectorXd lo, hi;
  bounding_box(domain, lo, hi);

  int per_dim = static_cast<int>(std::ceil(std::pow(double(min_points), 1.0 / n)));
  per_dim = std::max(per_dim, 2);

  Eigen::VectorXd best;
  double best_value = std::numeric_limits<double>::infinity();

  auto scan = [&](const Eigen::VectorXd& from, const Eigen::VectorXd& to, int k) {
    Eigen::VectorXd x(n);
    std::vector<int> idx(n, 0);
    while (true) {
      for (int d = 0; d < n; ++d) {
        x[d] = k == 1 ? from[d]
                      : from[d] + (to[d] - from[d]) * double(idx[d]) / double(k - 1);
      }
      if (domain.contains(x, 1e-12)) {
        double v = total_loss(losses, x);
        if (best.size() == 0) {
          best_value = v;
          best = x;
        } else {
          double tol = 1e-12 * (1.0 + std::abs(best_value));
          // Min-norm tie-break among near-equal minimizers.
          if (v < best_value - tol ||
              (v <= best_value + tol && x.norm() < best.norm())) {
            best_value = std::min(v, best_value);
            best = x;
          }
        }
      }
      int d = 0;
      while (d < n && ++idx[d] == k) idx[d++] = 0;
      if (d == n) break;
    }
  };

  scan(lo, hi, per_dim);
  if (best.size() == 0) {
    throw UnsupportedCompositionError("grid oracle found no feasible point");
  }

  // Zoom: shrink a window of twice the current spacing around the incumbent.
  Eigen::VectorXd spacing = (hi - lo) / double(per_dim - 1);
  for (int round = 0; round < 15; ++round) {
    Eigen::VectorXd from = (best - 2.0 * spacing).cwiseMax(lo);
    Eigen::VectorXd to = (best + 2.0 * spacing).cwiseMin(hi);
    scan(from, to, 11);
    spacing = (to - from) / 10.0;
  }
  return best;
}

Eigen::VectorXd hindsight_optimum(const std::vector<LossFunction>& losses,
                                  const Domain& domain) {
  if (losses.empty()) throw Error("hindsight optimum of an empty sequence");

  if (all_linear(losses)) {
    // The linear-sum argmin is the FTL step of the whole history with
    // min-norm tie-breaking (no last-loss preference).
    FtlHistory history;
    history.rounds = static_cast<int>(losses.size());
    history.linear_sum = Eigen::VectorXd::Zero(domain.dimension());
    for (const auto& f : losses) history.linear_sum += f.linear_coeff();
    return ftl_step(history, domain);
  }

  // Quadratic closed form: feasible stationary point of the summed losses.
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(domain.dimension(), domain.dimension());
  Eigen::VectorXd c = Eigen::VectorXd::Zero(domain.dimension());
  for (const auto& f : losses) {
    if (f.kind() == LossKind::kQuadratic) Q += f.quadratic_matrix();
    c += f.linear_coeff();
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(Q);
  Eigen::VectorXd stationary = cod.solve(-c);
  if ((Q * stationary + c).norm() <= 1e-10 * (1.0 + c.norm()) &&
      domain.contains(stationary, 1e-12)) {
    return stationary;
  }

  if (domain.dimension() <= 3) return hindsight_optimum_grid(losses, domain);
  throw UnsupportedCompositionError(
      "no exact route for this loss composition in n > 3");
}

RegretCurve regret_curve(const Trace& trace,
                         const std::vector<LossFunction>& losses,
                         const Eigen::VectorXd& x_star) {
  const int T = trace.rounds();
  if (static_cast<int>(losses.size()) != T) {
    throw LengthMismatchError("trace has " + std::to_string(T) + " rounds, " +
                              std::to_string(losses.size()) + " losses given");
  }
  RegretCurve curve;
  curve.comparator = x_star;
  curve.cumulative.resize(T);
  double sum = 0.0;
  for (int t = 0; t < T; ++t) {
    sum += trace.losses[t] - losses[t].eval(x_star);
    curve.cumulative[t] = sum;
  }
  curve.final_regret = T > 0 ? curve.cumulative[T - 1] : 0.0;
  return curve;
}

double subinterval_regret(const Trace& trace,
                          const std::vector<LossFunction>& losses, int s, int t,
                          const Domain& domain) {
  const int T = trace.rounds();
  if (s < 1 || t < s || t > T || static_cast<int>(losses.size()) != T) {
    throw BadIntervalError("bad sub-interval [" + std::to_string(s) + ", " +
                           std::to_string(t) + "] for horizon " +
                           std::to_string(T));
  }
  std::vector<LossFunction> window(losses.begin() + (s - 1), losses.begin() + t);
  Eigen::VectorXd x_star = hindsight_optimum(window, domain);
  double regret = 0.0;
  for (int u = s; u <= t; ++u) {
    regret += trace.losses[u - 1] - losses[u - 1].eval(x_star);
  }
  return regret;
}

BoundValues theorem_bounds(double theta, double grad_bound, double diameter,
                           int horizon, std::optional<double> D) {
  if (!(theta > 0.0) || !(grad_bound > 0.0) || !(diameter > 0.0) || horizon < 2) {
    throw Error("theorem bounds require positive inputs and horizon >= 2");
  }
  const double T = static_cast<double>(horizon);
  const double gd = grad_bound * diameter;
  BoundValues bounds;
  bounds.theorem1 = 9.0 * std::sqrt(theta) * gd * std::sqrt(T * std::log(T)) +
                    9.0 * std::pow(gd, 1.5) * std::sqrt(T);
  if (D) bounds.theorem2 = 8.0 * (*D) * gd * std::sqrt(T);
  return bounds;
}

TrajectoryReport verify_trajectory_inequalities(
    const Trace& trace, const std::vector<LossFunction>& losses,
    const Barrier& barrier, const Eigen::VectorXd& comparator,
    const TuningConstants& tuning) {
  if (!barrier.domain().is_interior(comparator)) {
    throw NotInteriorError(barrier.domain().min_slack(comparator));
  }
  const double eta = tuning.eta;
  const double gd = tuning.grad_bound * tuning.diameter;
  if (eta * gd > 0.25 + 1e-12) {
    throw std::invalid_argument(
        "trajectory inequalities require eta G diam <= 1/4");
  }
  const int T = trace.rounds();
  if (static_cast<int>(losses.size()) != T) {
    throw LengthMismatchError("losses do not match the trace");
  }

  TrajectoryReport report;
  report.rounds = T;
  report.worst_linearized_slack = std::numeric_limits<double>::infinity();
  report.worst_bregman_slack = std::numeric_limits<double>::infinity();

  const double lin_bound = 8.0 * gd * gd * eta * eta;
  const double breg_bound = 2.0 * eta * eta * gd * gd;

  for (int t = 1; t <= T; ++t) {
    Eigen::VectorXd x_t = trace.iterate(t);
    Eigen::VectorXd x_next = trace.iterate(t + 1);
    Eigen::VectorXd g = losses[t - 1].grad(x_t);

    Eigen::VectorXd grad_t = barrier.gradient(x_t);
    Eigen::VectorXd grad_next = barrier.gradient(x_next);

    double lhs = eta * g.dot(x_t - comparator) -
                 (grad_next - grad_t).dot(comparator - x_t);
    report.worst_linearized_slack =
        std::min(report.worst_linearized_slack, lin_bound - lhs);

    double breg = bregman_divergence(barrier, x_t, x_next);
    report.worst_bregman_slack =
        std::min(report.worst_bregman_slack, breg_bound - breg);
  }

  report.passed = report.worst_linearized_slack >= -1e-8 &&
                  report.worst_bregman_slack >= -1e-9;
  return report;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trace_csv(const std::string& path, const Trace& trace,
                     const RegretCurve& regret) {
  const int T = trace.rounds();
  if (static_cast<int>(regret.cumulative.size()) != T) {
    throw LengthMismatchError("regret curve does not match the trace");
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");

  const int n = static_cast<int>(trace.iterates.cols());
  out << "t";
  for (int j = 0; j < n; ++j) out << ",x_" << j;
  out << ",loss,grad_norm,min_slack,local_step_norm,cum_regret\n";
  for (int t = 0; t < T; ++t) {
    out << (t + 1);
    for (int j = 0; j < n; ++j) out << ',' << format_double(trace.iterates(t, j));
    out << ',' << format_double(trace.losses[t]);
    out << ',' << format_double(trace.grad_norms[t]);
    out << ',' << format_double(trace.min_slacks[t]);
    out << ',' << format_double(trace.local_step_norms[t]);
    out << ',' << format_double(regret.cumulative[t]);
    out << '\n';
  }
  if (!out) throw Error("failed while writing '" + path + "'");
}

}  // namespace dikin

#include "dikin/losses.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "dikin/rng.hpp"

namespace dikin {

LossFunction LossFunction::linear(Eigen::VectorXd c) {
  if (!c.allFinite()) throw Error("linear loss requires finite coefficients");
  LossFunction f;
  f.kind_ = LossKind::kLinear;
  f.grad_bound_ = c.norm();
  f.c_ = std::move(c);
  return f;
}

LossFunction LossFunction::quadratic(Eigen::MatrixXd Q, Eigen::VectorXd c,
                                     const Domain& domain) {
  if (Q.rows() != Q.cols() || Q.rows() != c.size()) {
    throw Error("quadratic loss requires square Q matching c");
  }
  Eigen::MatrixXd sym = 0.5 * (Q + Q.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  double min_eig = eig.eigenvalues().minCoeff();
  if (min_eig < -1e-10) {
    throw NotPsdError("quadratic loss matrix has eigenvalue " +
                      std::to_string(min_eig));
  }
  double op_norm = eig.eigenvalues().cwiseAbs().maxCoeff();

  // ||Qx + c|| <= ||Q|| sup ||x|| + ||c||; the reach sup ||x|| over K is
  // exact for boxes and balls, and hint + diameter for general polytopes.
  double reach = 0.0;
  switch (domain.kind()) {
    case DomainKind::kBox: {
      double sq = 0.0;
      for (int i = 0; i < domain.dimension(); ++i) {
        sq += std::pow(std::max(std::abs(domain.lower()[i]),
                                std::abs(domain.upper()[i])), 2);
      }
      reach = std::sqrt(sq);
      break;
    }
    case DomainKind::kBall:
      reach = domain.center().norm() + domain.radius();
      break;
    case DomainKind::kPolytope:
      reach = domain.interior_point().norm() + diameter(domain);
      break;
  }

  LossFunction f;
  f.kind_ = LossKind::kQuadratic;
  f.grad_bound_ = op_norm * reach + c.norm();
  f.Q_ = std::move(sym);
  f.c_ = std::move(c);
  return f;
}

double LossFunction::eval(const Eigen::VectorXd& x) const {
  if (kind_ == LossKind::kLinear) return c_.dot(x);
  return 0.5 * x.dot(Q_ * x) + c_.dot(x);
}

Eigen::VectorXd LossFunction::grad(const Eigen::VectorXd& x) const {
  if (kind_ == LossKind::kLinear) return c_;
  return Q_ * x + c_;
}

AdversaryScript AdversaryScript::iid_linear(int horizon, std::uint64_t seed,
                                            double scale) {
  if (horizon < 1) throw Error("adversary horizon must be at least 1");
  if (!(scale >= 0.0)) throw Error("iid_linear scale must be nonnegative");
  AdversaryScript s;
  s.kind_ = AdversaryKind::kIidLinear;
  s.horizon_ = horizon;
  s.seed_ = seed;
  s.scale_ = scale;
  return s;
}

AdversaryScript AdversaryScript::alternating(int horizon) {
  if (horizon < 2) throw Error("alternating adversary requires horizon >= 2");
  AdversaryScript s;
  s.kind_ = AdversaryKind::kAlternating;
  s.horizon_ = horizon;
  return s;
}

AdversaryScript AdversaryScript::piecewise_linear(int horizon,
                                                  std::vector<Segment> segments) {
  if (horizon < 1) throw Error("adversary horizon must be at least 1");
  long total = 0;
  for (const auto& seg : segments) {
    if (seg.length < 1) throw LengthMismatchError("segment length must be >= 1");
    total += seg.length;
  }
  if (total != horizon) {
    throw LengthMismatchError("segment lengths sum to " + std::to_string(total) +
                              ", horizon is " + std::to_string(horizon));
  }
  AdversaryScript s;
  s.kind_ = AdversaryKind::kPiecewiseLinear;
  s.horizon_ = horizon;
  s.segments_ = std::move(segments);
  return s;
}

AdversaryScript AdversaryScript::fixed_quadratic(int horizon, Eigen::MatrixXd Q,
                                                 Eigen::VectorXd optimum) {
  if (horizon < 1) throw Error("adversary horizon must be at least 1");
  if (Q.rows() != Q.cols() || Q.rows() != optimum.size()) {
    throw Error("fixed_quadratic requires square Q matching the optimum");
  }
  AdversaryScript s;
  s.kind_ = AdversaryKind::kFixedQuadratic;
  s.horizon_ = horizon;
  s.Q_ = std::move(Q);
  s.optimum_ = std::move(optimum);
  return s;
}

std::vector<LossFunction> AdversaryScript::generate(const Domain& domain) const {
  std::vector<LossFunction> losses;
  losses.reserve(horizon_);
  switch (kind_) {
    case AdversaryKind::kIidLinear: {
      Rng rng(seed_);
      for (int t = 0; t < horizon_; ++t) {
        losses.push_back(
            LossFunction::linear(scale_ * rng.unit_sphere(domain.dimension())));
      }
      break;
    }
    case AdversaryKind::kAlternating: {
      if (domain.kind() != DomainKind::kBox || domain.dimension() != 1 ||
          std::abs(domain.lower()[0] + 1.0) > 1e-12 ||
          std::abs(domain.upper()[0] - 1.0) > 1e-12) {
        throw Error("alternating adversary is defined on the box [-1, 1]");
      }
      for (int t = 0; t < horizon_; ++t) {
        Eigen::VectorXd c(1);
        c[0] = (t % 2 == 0) ? 1.0 : -1.0;
        losses.push_back(LossFunction::linear(std::move(c)));
      }
      break;
    }
    case AdversaryKind::kPiecewiseLinear: {
      for (const auto& seg : segments_) {
        if (seg.c.size() != domain.dimension()) {
          throw Error("segment coefficient has wrong dimension");
        }
        for (int i = 0; i < seg.length; ++i) {
          losses.push_back(LossFunction::linear(seg.c));
        }
      }
      break;
    }
    case AdversaryKind::kFixedQuadratic: {
      if (optimum_.size() != domain.dimension()) {
        throw Error("fixed_quadratic optimum has wrong dimension");
      }
      // 1/2 (x - a)' Q (x - a) with the constant dropped: c = -Q a.
      LossFunction f = LossFunction::quadratic(Q_, -Q_ * optimum_, domain);
      losses.assign(horizon_, f);
      break;
    }
  }
  return losses;
}

double AdversaryScript::declared_grad_bound(const Domain& domain) const {
  switch (kind_) {
    case AdversaryKind::kIidLinear:
      return scale_;
    case AdversaryKind::kAlternating:
      return 1.0;
    case AdversaryKind::kPiecewiseLinear: {
      double g = 0.0;
      for (const auto& seg : segments_) g = std::max(g, seg.c.norm());
      return g;
    }
    case AdversaryKind::kFixedQuadratic:
      return LossFunction::quadratic(Q_, -Q_ * optimum_, domain).grad_bound();
  }
  return 0.0;
}

double grad_bound(const std::vector<LossFunction>& losses) {
  double g = 0.0;
  for (const auto& f : losses) g = std::max(g, f.grad_bound());
  return g;
}

}  // namespace dikin

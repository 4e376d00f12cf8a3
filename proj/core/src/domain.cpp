#include "dikin/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

namespace dikin {

namespace {

constexpr double kUnitTol = 1e-9;

void require_unit(const Eigen::VectorXd& u) {
  if (std::abs(u.norm() - 1.0) > kUnitTol) {
    throw NotUnitError("direction is not a unit vector");
  }
}

}  // namespace

Domain Domain::box(Eigen::VectorXd lower, Eigen::VectorXd upper) {
  if (lower.size() != upper.size() || lower.size() == 0) {
    throw Error("box bounds must be non-empty and of equal dimension");
  }
  for (int i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < upper[i])) {
      throw Error("box requires lower < upper in every coordinate");
    }
  }
  Domain d;
  d.kind_ = DomainKind::kBox;
  d.dim_ = static_cast<int>(lower.size());
  d.lower_ = std::move(lower);
  d.upper_ = std::move(upper);
  return d;
}

Domain Domain::ball(Eigen::VectorXd center, double radius) {
  if (center.size() == 0) throw Error("ball center must be non-empty");
  if (!(radius > 0.0)) throw Error("ball radius must be positive");
  Domain d;
  d.kind_ = DomainKind::kBall;
  d.dim_ = static_cast<int>(center.size());
  d.center_ = std::move(center);
  d.radius_ = radius;
  return d;
}

Domain Domain::polytope(Eigen::MatrixXd A, Eigen::VectorXd b,
                        std::optional<Eigen::VectorXd> interior_point,
                        std::optional<double> diameter_bound) {
  if (A.rows() == 0 || A.cols() == 0 || A.rows() != b.size()) {
    throw Error("polytope requires a non-empty A with rows(A) == size(b)");
  }
  Domain d;
  d.kind_ = DomainKind::kPolytope;
  d.dim_ = static_cast<int>(A.cols());
  d.A_ = std::move(A);
  d.b_ = std::move(b);
  if (interior_point) {
    if (interior_point->size() != d.dim_) {
      throw Error("polytope interior point has wrong dimension");
    }
    double slack = (d.A_ * *interior_point - d.b_).minCoeff();
    if (slack <= kInteriorSlack) throw NotInteriorError(slack);
    d.interior_hint_ = std::move(interior_point);
  }
  d.diameter_override_ = diameter_bound;
  d.diameter_cache_ = std::make_shared<std::atomic<double>>(
      std::numeric_limits<double>::quiet_NaN());
  return d;
}

int Domain::num_constraints() const {
  switch (kind_) {
    case DomainKind::kBox:
      return 2 * dim_;
    case DomainKind::kBall:
      return 1;
    case DomainKind::kPolytope:
      return static_cast<int>(A_.rows());
  }
  return 0;
}

const Eigen::MatrixXd& Domain::constraint_matrix() const {
  if (kind_ != DomainKind::kPolytope) throw Error("not a polytope domain");
  return A_;
}

const Eigen::VectorXd& Domain::constraint_rhs() const {
  if (kind_ != DomainKind::kPolytope) throw Error("not a polytope domain");
  return b_;
}

const Eigen::VectorXd& Domain::lower() const {
  if (kind_ != DomainKind::kBox) throw Error("not a box domain");
  return lower_;
}

const Eigen::VectorXd& Domain::upper() const {
  if (kind_ != DomainKind::kBox) throw Error("not a box domain");
  return upper_;
}

const Eigen::VectorXd& Domain::center() const {
  if (kind_ != DomainKind::kBall) throw Error("not a ball domain");
  return center_;
}

double Domain::radius() const {
  if (kind_ != DomainKind::kBall) throw Error("not a ball domain");
  return radius_;
}

double Domain::min_slack(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) throw Error("point has wrong dimension");
  switch (kind_) {
    case DomainKind::kBox: {
      double s = std::numeric_limits<double>::infinity();
      for (int i = 0; i < dim_; ++i) {
        s = std::min(s, std::min(x[i] - lower_[i], upper_[i] - x[i]));
      }
      return s;
    }
    case DomainKind::kBall:
      return radius_ - (x - center_).norm();
    case DomainKind::kPolytope:
      return (A_ * x - b_).minCoeff();
  }
  return 0.0;
}

Eigen::VectorXd Domain::interior_point() const {
  switch (kind_) {
    case DomainKind::kBox:
      return 0.5 * (lower_ + upper_);
    case DomainKind::kBall:
      return center_;
    case DomainKind::kPolytope:
      if (interior_hint_) return *interior_hint_;
      throw Error(
          "polytope domain has no interior point hint; supply one at "
          "construction (config key domain.interior_point)");
  }
  return Eigen::VectorXd();
}

double ray_to_boundary(const Domain& domain, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& u) {
  require_unit(u);
  double slack = domain.min_slack(x);
  if (slack <= kInteriorSlack) throw NotInteriorError(slack);

  double t_max = std::numeric_limits<double>::infinity();
  switch (domain.kind()) {
    case DomainKind::kBox: {
      for (int i = 0; i < domain.dimension(); ++i) {
        if (u[i] > 0.0) {
          t_max = std::min(t_max, (domain.upper()[i] - x[i]) / u[i]);
        } else if (u[i] < 0.0) {
          t_max = std::min(t_max, (domain.lower()[i] - x[i]) / u[i]);
        }
      }
      break;
    }
    case DomainKind::kBall: {
      // Positive root of ||x + t u - c|| = r with ||u|| = 1.
      Eigen::VectorXd d = x - domain.center();
      double du = d.dot(u);
      double r2 = domain.radius() * domain.radius();
      double disc = du * du + (r2 - d.squaredNorm());
      t_max = -du + std::sqrt(std::max(disc, 0.0));
      break;
    }
    case DomainKind::kPolytope: {
      Eigen::VectorXd s = domain.constraint_matrix() * x - domain.constraint_rhs();
      Eigen::VectorXd w = domain.constraint_matrix() * u;
      for (int i = 0; i < w.size(); ++i) {
        if (w[i] < 0.0) t_max = std::min(t_max, s[i] / (-w[i]));
      }
      break;
    }
  }
  if (!std::isfinite(t_max)) {
    throw UnboundedError("ray never exits the domain; the set is unbounded");
  }
  double bound = diameter(domain);
  if (t_max > bound * (1.0 + 1e-9) + 1e-12) {
    throw InternalError("ray exit distance exceeds the domain diameter");
  }
  return t_max;
}

double directed_boundary_distance(const Domain& domain, const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& y) {
  Eigen::VectorXd d = y - x;
  double norm = d.norm();
  if (norm <= 1e-14 * (1.0 + x.norm())) return 0.0;
  return ray_to_boundary(domain, x, d / norm);
}

namespace {

// --- polytope diameter helpers -------------------------------------------

// Enumerate vertices of {Ax >= b} as intersections of n active constraints.
// Only attempted when the combination count is small.
std::vector<Eigen::VectorXd> enumerate_vertices(const Eigen::MatrixXd& A,
                                                const Eigen::VectorXd& b) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  std::vector<Eigen::VectorXd> vertices;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;

  auto advance = [&]() {
    int k = n - 1;
    while (k >= 0 && idx[k] == m - n + k) --k;
    if (k < 0) return false;
    ++idx[k];
    for (int j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };

  do {
    Eigen::MatrixXd As(n, n);
    Eigen::VectorXd bs(n);
    for (int i = 0; i < n; ++i) {
      As.row(i) = A.row(idx[i]);
      bs[i] = b[idx[i]];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(As);
    if (!lu.isInvertible()) continue;
    Eigen::VectorXd v = lu.solve(bs);
    double scale = 1.0 + v.norm();
    if (((A * v - b).array() >= -1e-9 * scale).all()) {
      bool duplicate = false;
      for (const auto& w : vertices) {
        if ((w - v).norm() <= 1e-9 * scale) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) vertices.push_back(v);
    }
  } while (advance());
  return vertices;
}

long combination_count(int m, int n) {
  double c = 1.0;
  for (int i = 0; i < n; ++i) c *= double(m - i) / double(i + 1);
  return c > 1e8 ? long(1e8) : long(c);
}

// Checks whether u (or -u) is a recession direction: Au >= 0 componentwise.
bool recession_direction(const Eigen::MatrixXd& A, const Eigen::VectorXd& u) {
  return ((A * u).array() >= -1e-12).all();
}

// Certified bound on max c'x over {Ax >= b} via the log-barrier central path:
// at the minimizer of t*(-c'x) + R(x) the duality gap is at most m/t.
double barrier_extent_bound(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                            const Eigen::VectorXd& start, const Eigen::VectorXd& c) {
  const int m = static_cast<int>(A.rows());
  Eigen::VectorXd x = start;
  const double start_scale = 1.0 + start.norm();
  double t = 1.0;
  const double t_final = 1e10;

  while (t < t_final) {
    // Damped Newton on t*(-c'x) - sum log(Ax - b).
    for (int iter = 0; iter < 60; ++iter) {
      Eigen::VectorXd s = A * x - b;
      if (s.minCoeff() <= 0.0) {
        throw InternalError("extent solver left the interior");
      }
      Eigen::VectorXd inv = s.cwiseInverse();
      Eigen::VectorXd grad = -t * c - A.transpose() * inv;
      Eigen::MatrixXd H = A.transpose() * inv.array().square().matrix().asDiagonal() * A;
      Eigen::LDLT<Eigen::MatrixXd> ldlt(H);
      if (ldlt.info() != Eigen::Success) {
        throw InternalError("extent solver Hessian factorization failed");
      }
      Eigen::VectorXd step = ldlt.solve(-grad);
      double lambda2 = step.dot(-grad);
      if (lambda2 < 0.0) lambda2 = step.dot(H * step);
      double lambda = std::sqrt(std::max(lambda2, 0.0));
      double alpha = lambda > 0.25 ? 1.0 / (1.0 + lambda) : 1.0;
      x += alpha * step;
      if (x.norm() > 1e9 * start_scale) {
        throw UnboundedError("polytope extent diverged; the set is unbounded");
      }
      if (lambda < 1e-8) break;
    }
    t *= 8.0;
  }
  return c.dot(x) + double(m) / t;
}

double polytope_diameter(const Domain& domain) {
  const Eigen::MatrixXd& A = domain.constraint_matrix();
  const Eigen::VectorXd& b = domain.constraint_rhs();
  const int n = domain.dimension();
  const int m = static_cast<int>(A.rows());

  // Cheap recession probe along the coordinate axes catches axis-aligned
  // unbounded sets before any heavier work.
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[j] = 1.0;
    if (recession_direction(A, e) || recession_direction(A, -e)) {
      throw UnboundedError("polytope has a coordinate recession direction");
    }
  }

  if (n <= 3 && combination_count(m, n) <= 4000) {
    auto vertices = enumerate_vertices(A, b);
    if (!vertices.empty()) {
      // A bounded polyhedron is the hull of its vertices; an empty or
      // degenerate enumeration falls through to the extent bound.
      double best = 0.0;
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
          best = std::max(best, (vertices[i] - vertices[j]).norm());
        }
      }
      if (best > 0.0) return best;
    }
  }

  // Fallback: certified per-coordinate extents through the barrier central
  // path; the Euclidean diagonal of the bounding box bounds the diameter.
  Eigen::VectorXd start = domain.interior_point();
  double sq = 0.0;
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[j] = 1.0;
    double hi = barrier_extent_bound(A, b, start, e);
    double lo = -barrier_extent_bound(A, b, start, -e);
    sq += (hi - lo) * (hi - lo);
  }
  return std::sqrt(sq);
}

}  // namespace

double diameter(const Domain& domain) {
  switch (domain.kind()) {
    case DomainKind::kBox:
      return (domain.upper() - domain.lower()).norm();
    case DomainKind::kBall:
      return 2.0 * domain.radius();
    case DomainKind::kPolytope: {
      if (domain.diameter_override()) return *domain.diameter_override();
      double cached = domain.diameter_cache_->load(std::memory_order_relaxed);
      if (!std::isnan(cached)) return cached;
      double value = polytope_diameter(domain);
      domain.diameter_cache_->store(value, std::memory_order_relaxed);
      return value;
    }
  }
  return 0.0;
}

std::vector<Eigen::VectorXd> polytope_vertices(const Domain& domain,
                                               long max_combinations) {
  const Eigen::MatrixXd& A = domain.constraint_matrix();
  const int n = domain.dimension();
  const int m = static_cast<int>(A.rows());
  if (m < n || combination_count(m, n) > max_combinations) {
    throw UnsupportedCompositionError(
        "polytope too large for vertex enumeration");
  }
  return enumerate_vertices(A, domain.constraint_rhs());
}

Eigen::VectorXd sample_interior(const Domain& domain, Rng& rng, double margin) {
  const int n = domain.dimension();
  switch (domain.kind()) {
    case DomainKind::kBox: {
      Eigen::VectorXd x(n);
      for (int i = 0; i < n; ++i) {
        double lo = domain.lower()[i], hi = domain.upper()[i];
        double pad = margin * (hi - lo) * 0.5;
        x[i] = rng.uniform(lo + pad, hi - pad);
      }
      return x;
    }
    case DomainKind::kBall: {
      Eigen::VectorXd u = rng.unit_sphere(n);
      double radial = std::pow(rng.uniform(0.0, 1.0), 1.0 / n);
      return domain.center() + (1.0 - margin) * domain.radius() * radial * u;
    }
    case DomainKind::kPolytope: {
      // Random ray from the interior hint; not uniform, but strictly
      // feasible and reproducible, which is all the property suites need.
      Eigen::VectorXd x0 = domain.interior_point();
      Eigen::VectorXd u = rng.unit_sphere(n);
      double t_max = ray_to_boundary(domain, x0, u);
      return x0 + rng.uniform(0.0, (1.0 - margin) * t_max) * u;
    }
  }
  return Eigen::VectorXd();
}

}  // namespace dikin

#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "dikin/errors.hpp"
#include "dikin/rng.hpp"

namespace dikin {

/// Points with slack at or below this are treated as non-interior. Guards the
/// log evaluations against round-off at near-boundary points.
inline constexpr double kInteriorSlack = 1e-12;

enum class DomainKind { kBox, kBall, kPolytope };

/// Bounded convex feasible set: a polytope {x | Ax >= b}, an axis-aligned box
/// (a polytope with closed forms), or a Euclidean ball.
class Domain {
 public:
  static Domain box(Eigen::VectorXd lower, Eigen::VectorXd upper);
  static Domain ball(Eigen::VectorXd center, double radius);
  /// General polytope. `interior_point` seeds samplers and the diameter
  /// bound computation; required for operations that need a strictly
  /// feasible start. `diameter_bound` overrides the computed bound.
  static Domain polytope(Eigen::MatrixXd A, Eigen::VectorXd b,
                         std::optional<Eigen::VectorXd> interior_point = {},
                         std::optional<double> diameter_bound = {});

  DomainKind kind() const { return kind_; }
  int dimension() const { return dim_; }
  /// Number of linear constraints: 2n for a box, m for a polytope, 1 for a
  /// ball (its single nonlinear constraint).
  int num_constraints() const;

  const Eigen::MatrixXd& constraint_matrix() const;
  const Eigen::VectorXd& constraint_rhs() const;
  const Eigen::VectorXd& lower() const;
  const Eigen::VectorXd& upper() const;
  const Eigen::VectorXd& center() const;
  double radius() const;

  /// Minimum feasibility margin: min_i (Ax - b)_i for polyhedra,
  /// r - ||x - c|| for balls. Negative outside the set.
  double min_slack(const Eigen::VectorXd& x) const;
  bool is_interior(const Eigen::VectorXd& x) const {
    return min_slack(x) > kInteriorSlack;
  }
  bool contains(const Eigen::VectorXd& x, double tol = 1e-12) const {
    return min_slack(x) >= -tol;
  }

  /// A strictly interior point: box/ball center, or the supplied hint for
  /// general polytopes (throws NotInteriorError if none was given).
  Eigen::VectorXd interior_point() const;

  bool has_interior_hint() const { return interior_hint_.has_value(); }
  std::optional<double> diameter_override() const { return diameter_override_; }

 private:
  Domain() = default;

  friend double diameter(const Domain&);

  DomainKind kind_ = DomainKind::kBox;
  int dim_ = 0;
  Eigen::MatrixXd A_;          // polytope
  Eigen::VectorXd b_;          // polytope
  Eigen::VectorXd lower_, upper_;  // box
  Eigen::VectorXd center_;     // ball
  double radius_ = 0.0;        // ball
  std::optional<Eigen::VectorXd> interior_hint_;
  std::optional<double> diameter_override_;
  // Lazily computed polytope diameter bound, shared across copies so the
  // extent solver runs at most once per constructed domain.
  std::shared_ptr<std::atomic<double>> diameter_cache_;
};

/// Distance from an interior x to the boundary along the unit direction u:
/// max{t | x + t u in K}. Throws NotUnitError if ||u|| is not 1 within 1e-9,
/// UnboundedError if the ray never exits.
double ray_to_boundary(const Domain& domain, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& u);

/// tau_max(x, y): boundary distance from x along the direction of y.
/// Defined as 0 when y == x.
double directed_boundary_distance(const Domain& domain, const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& y);

/// Euclidean diameter: exact for boxes (diagonal) and balls (2r); for general
/// polytopes, exact via vertex enumeration when small, otherwise a certified
/// upper bound from per-coordinate extents. Throws UnboundedError when the
/// polytope has a recession direction.
double diameter(const Domain& domain);

/// Random strictly interior point with a relative margin kept from the
/// boundary (used by property suites; not uniform for general polytopes).
Eigen::VectorXd sample_interior(const Domain& domain, Rng& rng,
                                double margin = 0.05);

/// Vertices of a small polytope, enumerated as intersections of n active
/// constraints. Throws UnsupportedCompositionError when the combination
/// count exceeds `max_combinations`.
std::vector<Eigen::VectorXd> polytope_vertices(const Domain& domain,
                                               long max_combinations = 4000);

}  // namespace dikin

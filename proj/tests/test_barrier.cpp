#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "dikin/barrier.hpp"

using namespace dikin;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

VectorXd vec1(double a) {
  VectorXd v(1);
  v << a;
  return v;
}

VectorXd vec2(double a, double b) {
  VectorXd v(2);
  v << a, b;
  return v;
}

Domain unit_box(int n) {
  return Domain::box(VectorXd::Constant(n, -1.0), VectorXd::Constant(n, 1.0));
}

Domain hexagon() {
  MatrixXd A(6, 2);
  VectorXd b = VectorXd::Constant(6, -1.0);
  for (int i = 0; i < 6; ++i) {
    double angle = 2.0 * M_PI * i / 6.0 + 0.37;
    A(i, 0) = -std::cos(angle);
    A(i, 1) = -std::sin(angle);
  }
  return Domain::polytope(A, b, VectorXd::Zero(2));
}

}  // namespace

TEST_CASE("box barrier closed forms on [-1, 1]") {
  Barrier barrier(unit_box(1));
  CHECK(barrier.theta() == doctest::Approx(2.0));
  CHECK(barrier.diameter() == doctest::Approx(2.0));

  SUBCASE("symmetric point has unit slacks") {
    BarrierEval ev = barrier.eval(vec1(0.0));
    CHECK(ev.value == doctest::Approx(0.0));
    CHECK(ev.gradient[0] == doctest::Approx(0.0));
    CHECK(ev.hessian(0, 0) == doctest::Approx(2.0));
  }

  SUBCASE("x = 0.5: -ln(1-x) - ln(1+x) derivatives") {
    BarrierEval ev = barrier.eval(vec1(0.5));
    CHECK(ev.value == doctest::Approx(-std::log(0.75)));  // 0.28768...
    CHECK(ev.gradient[0] == doctest::Approx(4.0 / 3.0));
    CHECK(ev.hessian(0, 0) == doctest::Approx(1.0 / 2.25 + 4.0));  // 4.4444
  }

  SUBCASE("boundary point is rejected") {
    CHECK_THROWS_AS(barrier.eval(vec1(1.0)), NotInteriorError);
    try {
      barrier.eval(vec1(1.0));
    } catch (const NotInteriorError& e) {
      CHECK(e.min_slack() == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("box barrier matches the general polytope formulas") {
  Barrier box_barrier(unit_box(2));
  MatrixXd A(4, 2);
  A << 1, 0, -1, 0, 0, 1, 0, -1;
  Domain poly = Domain::polytope(A, VectorXd::Constant(4, -1.0),
                                 VectorXd::Zero(2));
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    VectorXd x = sample_interior(box_barrier.domain(), rng);
    BarrierEval a = box_barrier.eval(x);
    BarrierEval b = eval_polytope_barrier(poly, x);
    CHECK(a.value == doctest::Approx(b.value));
    CHECK((a.gradient - b.gradient).norm() == doctest::Approx(0.0));
    CHECK((a.hessian - b.hessian).norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("ball barrier closed forms") {
  Barrier barrier(Domain::ball(VectorXd::Zero(2), 1.0));
  CHECK(barrier.theta() == doctest::Approx(1.0));

  SUBCASE("center") {
    BarrierEval ev = barrier.eval(vec2(0.0, 0.0));
    CHECK(ev.value == doctest::Approx(0.0));
    CHECK(ev.gradient.norm() == doctest::Approx(0.0));
    CHECK((ev.hessian - 2.0 * MatrixXd::Identity(2, 2)).norm() ==
          doctest::Approx(0.0));
  }

  SUBCASE("x = (0.5, 0)") {
    BarrierEval ev = barrier.eval(vec2(0.5, 0.0));
    CHECK(ev.value == doctest::Approx(-std::log(0.75)));
  }

  SUBCASE("boundary") {
    CHECK_THROWS_AS(barrier.eval(vec2(1.0, 0.0)), NotInteriorError);
  }
}

TEST_CASE("hessian_solve") {
  SUBCASE("scaled identity") {
    MatrixXd H = 2.0 * MatrixXd::Identity(2, 2);
    VectorXd v = hessian_solve(H, vec2(1.0, 1.0));
    CHECK(v[0] == doctest::Approx(0.5));
    CHECK(v[1] == doctest::Approx(0.5));
  }
  SUBCASE("diagonal") {
    MatrixXd H = MatrixXd::Zero(2, 2);
    H(0, 0) = 4.0;
    H(1, 1) = 1.0;
    VectorXd v = hessian_solve(H, vec2(2.0, 3.0));
    CHECK(v[0] == doctest::Approx(0.5));
    CHECK(v[1] == doctest::Approx(3.0));
  }
  SUBCASE("indefinite matrix is rejected") {
    MatrixXd H(2, 2);
    H << 1, 2, 2, 1;  // eigenvalues 3, -1
    CHECK_THROWS_AS(hessian_solve(H, vec2(1.0, 0.0)),
                    NotPositiveDefiniteError);
  }
  SUBCASE("residual tolerance holds on barrier Hessians") {
    Barrier barrier(unit_box(2));
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
      VectorXd x = sample_interior(barrier.domain(), rng, 1e-3);
      MatrixXd H = barrier.eval(x).hessian;
      VectorXd g = rng.gaussian(2);
      VectorXd v = hessian_solve(H, g);
      CHECK((H * v - g).norm() <= 1e-10 * (1.0 + g.norm()));
    }
  }
  SUBCASE("near-boundary solves meet the contract or signal breakdown") {
    // Push evaluations into absurd conditioning (slack fractions down to
    // 1e-11 of the ray). Every returned solution must still satisfy the
    // residual bound; anything else must throw, never degrade silently.
    Barrier barrier(hexagon());
    const Domain& hex = barrier.domain();
    Rng rng(5);
    int solved = 0, breakdowns = 0;
    for (int k = 0; k < 2000; ++k) {
      VectorXd x0 = sample_interior(hex, rng, 0.0);
      VectorXd u = rng.unit_sphere(2);
      double t_max = ray_to_boundary(hex, x0, u);
      double frac = std::pow(10.0, rng.uniform(-11.0, -3.0));
      VectorXd x = x0 + (1.0 - frac) * t_max * u;
      if (!hex.is_interior(x)) continue;
      MatrixXd H = barrier.eval(x).hessian;
      VectorXd g = rng.unit_sphere(2);
      try {
        VectorXd v = hessian_solve(H, g);
        CHECK((H * v - g).norm() <= 1e-10 * (1.0 + g.norm()));
        ++solved;
      } catch (const NotPositiveDefiniteError&) {
        ++breakdowns;
      }
    }
    CHECK(solved > 0);
    CHECK(breakdowns > 0);  // the stress range does reach breakdown
  }
}

TEST_CASE("check_derivatives validates the closed forms") {
  SUBCASE("1-D box at 0.3") {
    Barrier barrier(unit_box(1));
    DerivativeReport rep = check_derivatives(barrier, vec1(0.3), 1e-5);
    CHECK(rep.gradient_rel_error <= 1e-5);
    CHECK(rep.hessian_rel_error <= 1e-5);
  }
  SUBCASE("unit ball at (0.2, -0.4)") {
    Barrier barrier(Domain::ball(VectorXd::Zero(2), 1.0));
    DerivativeReport rep = check_derivatives(barrier, vec2(0.2, -0.4), 1e-5);
    CHECK(rep.gradient_rel_error <= 1e-5);
    CHECK(rep.hessian_rel_error <= 1e-5);
  }
  SUBCASE("boundary point") {
    Barrier barrier(unit_box(1));
    CHECK_THROWS_AS(check_derivatives(barrier, vec1(1.0), 1e-5),
                    NotInteriorError);
  }
  SUBCASE("100 random points per domain stay under 1e-5") {
    Rng rng(23);
    for (const Domain& d : {unit_box(1), unit_box(2),
                            Domain::ball(VectorXd::Zero(2), 1.0),
                            hexagon().kind() == DomainKind::kPolytope
                                ? hexagon()
                                : unit_box(2)}) {
      Barrier barrier(d);
      for (int i = 0; i < 100; ++i) {
        VectorXd x = sample_interior(d, rng, 0.1);
        DerivativeReport rep = check_derivatives(barrier, x, 1e-5);
        CHECK(rep.gradient_rel_error <= 1e-5);
        CHECK(rep.hessian_rel_error <= 1e-5);
      }
    }
  }
}

TEST_CASE("check_self_concordance ratios stay below 1") {
  SUBCASE("1-D box at 0.5") {
    Barrier barrier(unit_box(1));
    SelfConcordanceReport rep =
        check_self_concordance(barrier, vec1(0.5), vec1(1.0), 2.0);
    CHECK(rep.ok());
  }
  SUBCASE("random 6-constraint polytope in 2-D with theta = 6") {
    Barrier barrier(hexagon());
    CHECK(barrier.theta() == doctest::Approx(6.0));
    Rng rng(29);
    for (int i = 0; i < 50; ++i) {
      VectorXd x = sample_interior(barrier.domain(), rng, 0.05);
      VectorXd u = rng.unit_sphere(2);
      CHECK(check_self_concordance(barrier, x, u, 6.0).ok());
    }
  }
  SUBCASE("ball barrier is 1-self-concordant over 1000 samples") {
    Barrier barrier(Domain::ball(VectorXd::Zero(2), 1.0));
    Rng rng(31);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      VectorXd x = sample_interior(barrier.domain(), rng, 0.02);
      VectorXd u = rng.unit_sphere(2);
      SelfConcordanceReport rep = check_self_concordance(barrier, x, u, 1.0);
      CHECK(rep.ok());
      worst = std::max(worst, rep.theta_ratio);
    }
    CHECK(worst <= 1.0 + 1e-4);
  }
}

TEST_CASE("Hessian eigenvalue floor on exact-diameter domains") {
  Rng rng(37);
  for (const Domain& d : {unit_box(1), unit_box(2),
                          Domain::ball(VectorXd::Zero(2), 1.0)}) {
    Barrier barrier(d);
    double floor = 1.0 / (barrier.diameter() * barrier.diameter());
    for (int i = 0; i < 1000; ++i) {
      VectorXd x = sample_interior(d, rng, 1e-4);
      Eigen::SelfAdjointEigenSolver<MatrixXd> eig(barrier.eval(x).hessian);
      CHECK(eig.eigenvalues().minCoeff() >= floor - 1e-9);
      CHECK(eig.eigenvalues().minCoeff() > 0.0);
    }
  }
}

TEST_CASE("barrier value diverges along rays into the boundary") {
  Rng rng(41);
  for (const Domain& d : {unit_box(1), unit_box(2),
                          Domain::ball(VectorXd::Zero(2), 1.0)}) {
    Barrier barrier(d);
    for (int r = 0; r < 20; ++r) {
      VectorXd x = sample_interior(d, rng, 0.3);
      VectorXd u = rng.unit_sphere(d.dimension());
      double t_max = ray_to_boundary(d, x, u);
      std::vector<double> values;
      for (double dist = 0.5 * t_max; dist > 1e-10; dist *= 0.2) {
        values.push_back(barrier.value(x + (t_max - dist) * u));
      }
      REQUIRE(values.size() >= 10);
      for (std::size_t k = values.size() - 10; k + 1 < values.size(); ++k) {
        CHECK(values[k + 1] > values[k]);
      }
      // The closest sample sits at boundary distance ~1e-10; the log
      // barrier has climbed well above its mid-ray value by then.
      CHECK(values.back() > 10.0);
      CHECK(values.back() > values.front() + 2.0 * std::log(10.0));
    }
  }
}

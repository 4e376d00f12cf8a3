#include <doctest.h>

#include <cmath>

#include "dikin/learners.hpp"

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

}  // namespace

TEST_CASE("tune_rate implements the canonical step-size rule") {
  SUBCASE("theta=4, G=1, diam=2sqrt(2), T=4096") {
    double diam = 2.0 * std::sqrt(2.0);
    TuningConstants t = tune_rate(4.0, 1.0, diam, 4096);
    double expected_D = std::sqrt(4.0 * std::log(4096.0) + diam);
    double expected_eta = expected_D / (std::sqrt(10.0) * diam * 64.0);
    CHECK(t.D == doctest::Approx(expected_D));           // 6.00829
    CHECK(t.D == doctest::Approx(6.0083).epsilon(1e-4));
    CHECK(t.eta == doctest::Approx(expected_eta));       // 0.0104961
    CHECK(t.eta * t.grad_bound * t.diameter ==
          doctest::Approx(0.0297).epsilon(1e-2));
    CHECK(t.eta * t.grad_bound * t.diameter <= 0.25);
    CHECK_FALSE(t.eta_clamped);
  }
  SUBCASE("tiny horizon clamps eta to the 1/4 regime") {
    TuningConstants t = tune_rate(1.0, 1.0, 1.0, 2);
    // Raw eta = sqrt(ln 2 + 1) / sqrt(20) = 0.29096 > 0.25.
    CHECK(t.eta_clamped);
    CHECK(t.eta == doctest::Approx(0.25));
    CHECK(t.eta * t.grad_bound * t.diameter <= 0.25 + 1e-15);
  }
  SUBCASE("eta decreases when G doubles") {
    TuningConstants a = tune_rate(2.0, 1.0, 2.0, 1024);
    TuningConstants b = tune_rate(2.0, 2.0, 2.0, 1024);
    CHECK(b.eta < a.eta);
  }
  SUBCASE("divergence-bound variant") {
    TuningConstants t = tune_rate_with_divergence_bound(1.0, 1.0, 1.0, 100);
    CHECK(t.D == doctest::Approx(1.0));
    CHECK(t.eta == doctest::Approx(1.0 / (std::sqrt(10.0) * 10.0)));
  }
}

TEST_CASE("ip_step on the 1-D box") {
  Domain box = unit_box(1);
  Barrier barrier(box);

  IpStepState state;
  state.x = vec1(0.0);
  state.tuning = tune_rate(2.0, 1.0, 2.0, 100);

  SUBCASE("hand-checked step: M=2, n=-1/2") {
    state.tuning.eta = 0.1;
    IpStepState next = ip_step(state, barrier.eval(state.x), vec1(1.0), box);
    CHECK(next.x[0] == doctest::Approx(-0.05));
    CHECK(next.last_step_local_norm ==
          doctest::Approx(0.1 * std::sqrt(0.5)));
    CHECK(next.round == 1);
    CHECK(next.unsafe_steps == 0);
  }
  SUBCASE("zero gradient does not move") {
    IpStepState next = ip_step(state, barrier.eval(state.x), vec1(0.0), box);
    CHECK(next.x[0] == 0.0);
    CHECK(next.last_step_local_norm == 0.0);
  }
  SUBCASE("eta = 0.8 is still a valid Dikin step") {
    state.tuning.eta = 0.8;
    IpStepState next = ip_step(state, barrier.eval(state.x), vec1(1.0), box);
    CHECK(next.last_step_local_norm == doctest::Approx(0.8 * std::sqrt(0.5)));
    CHECK(next.last_step_local_norm < 1.0);
    CHECK(next.x[0] == doctest::Approx(-0.4));
    CHECK(box.is_interior(next.x));
  }
  SUBCASE("oversized step shrinks to local norm 1/2 and is counted") {
    state.tuning.eta = 0.8;
    // ||g|| = 10 breaks the declared bound: raw local norm 0.8 sqrt(50) > 1.
    IpStepState next = ip_step(state, barrier.eval(state.x), vec1(10.0), box);
    CHECK(next.unsafe_steps == 1);
    CHECK(next.grad_bound_violations == 1);
    CHECK(next.last_step_local_norm == doctest::Approx(0.5));
    CHECK(box.is_interior(next.x));
  }
}

TEST_CASE("projection") {
  SUBCASE("box clamp") {
    VectorXd p = project(unit_box(2), vec2(2.0, 0.5));
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(p[1] == doctest::Approx(0.5));
  }
  SUBCASE("ball radial scaling") {
    VectorXd p = project(Domain::ball(VectorXd::Zero(2), 1.0), vec2(3.0, 4.0));
    CHECK(p[0] == doctest::Approx(0.6));
    CHECK(p[1] == doctest::Approx(0.8));
  }
  SUBCASE("interior points are fixed points") {
    VectorXd y = vec2(0.3, -0.4);
    CHECK((project(unit_box(2), y) - y).norm() == 0.0);
  }
  SUBCASE("polytope projection matches the box closed form") {
    MatrixXd A(4, 2);
    A << 1, 0, -1, 0, 0, 1, 0, -1;
    Domain poly =
        Domain::polytope(A, VectorXd::Constant(4, -1.0), VectorXd::Zero(2));
    Rng rng(73);
    for (int i = 0; i < 50; ++i) {
      VectorXd y = 3.0 * rng.gaussian(2);
      VectorXd exact = project(unit_box(2), y);
      VectorXd dykstra = project(poly, y);
      CHECK((exact - dykstra).norm() <= 1e-8);
    }
  }
  SUBCASE("variational inequality on a non-axis-aligned polytope") {
    MatrixXd A(3, 2);
    A << 1, 1, -1, 0.5, 0, -1;
    VectorXd b(3);
    b << -2, -2, -2;
    Domain poly = Domain::polytope(A, b, VectorXd::Zero(2));
    Rng rng(79);
    for (int i = 0; i < 30; ++i) {
      VectorXd y = 4.0 * rng.gaussian(2);
      VectorXd p = project(poly, y);
      CHECK(poly.contains(p, 1e-9));
      for (int k = 0; k < 100; ++k) {
        VectorXd x = sample_interior(poly, rng, 0.0);
        CHECK((y - p).dot(x - p) <= 1e-8);
      }
    }
  }
}

TEST_CASE("ogd_step") {
  Domain box = unit_box(1);
  SUBCASE("interior step") {
    OgdState s{vec1(0.9), 0.2};
    CHECK(ogd_step(s, vec1(1.0), box).x[0] == doctest::Approx(0.7));
  }
  SUBCASE("clamped to the boundary") {
    OgdState s{vec1(0.95), 0.2};
    CHECK(ogd_step(s, vec1(-1.0), box).x[0] == doctest::Approx(1.0));
  }
  SUBCASE("zero gradient") {
    OgdState s{vec1(0.25), 0.2};
    CHECK(ogd_step(s, vec1(0.0), box).x[0] == doctest::Approx(0.25));
  }
}

TEST_CASE("ftl_step tie-breaking") {
  SUBCASE("cumulative +x on the 1-D box picks -1") {
    FtlHistory h;
    h.add(LossFunction::linear(vec1(1.0)));
    CHECK(ftl_step(h, unit_box(1))[0] == doctest::Approx(-1.0));
  }
  SUBCASE("bare zero cumulative resolves by minimum norm") {
    FtlHistory h;
    h.rounds = 2;
    h.linear_sum = vec1(0.0);
    h.last.reset();  // no last-loss information
    CHECK(ftl_step(h, unit_box(1))[0] == doctest::Approx(0.0));
  }
  SUBCASE("per-coordinate sign rule on the 2-D box") {
    FtlHistory h;
    h.add(LossFunction::linear(vec2(2.0, -3.0)));
    VectorXd x = ftl_step(h, unit_box(2));
    CHECK(x[0] == doctest::Approx(-1.0));
    CHECK(x[1] == doctest::Approx(1.0));
  }
  SUBCASE("zero cumulative with a last loss plays its minimizer") {
    FtlHistory h;
    h.add(LossFunction::linear(vec1(1.0)));
    h.add(LossFunction::linear(vec1(-1.0)));  // cumulative 0, last -x
    CHECK(ftl_step(h, unit_box(1))[0] == doctest::Approx(1.0));
  }
  SUBCASE("ball closed form") {
    FtlHistory h;
    h.add(LossFunction::linear(vec2(3.0, 4.0)));
    VectorXd x = ftl_step(h, Domain::ball(VectorXd::Zero(2), 1.0));
    CHECK(x[0] == doctest::Approx(-0.6));
    CHECK(x[1] == doctest::Approx(-0.8));
  }
  SUBCASE("quadratic history: feasible stationary point") {
    Domain box = unit_box(2);
    FtlHistory h;
    h.add(LossFunction::quadratic(MatrixXd::Identity(2, 2), vec2(-0.2, 0.1),
                                  box));
    VectorXd x = ftl_step(h, box);
    CHECK(x[0] == doctest::Approx(0.2));
    CHECK(x[1] == doctest::Approx(-0.1));
  }
  SUBCASE("quadratic history: active constraint via projected gradient") {
    Domain box = unit_box(1);
    FtlHistory h;
    // Minimize (x - 3)^2 / 2 over [-1, 1]: optimum at the boundary x = 1.
    h.add(LossFunction::quadratic(MatrixXd::Identity(1, 1), vec1(-3.0), box));
    CHECK(ftl_step(h, box)[0] == doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("doubling wrapper") {
  Domain box = unit_box(2);
  Barrier barrier(box);

  SUBCASE("G estimate doubles past the observation") {
    DoublingIpLearner learner("dbl", barrier, VectorXd::Zero(2), 1.0,
                              barrier.theta(), barrier.diameter(), 64);
    learner.observe(LossFunction::linear(vec2(1.5, 0.0)));
    CHECK(learner.current_grad_bound() == doctest::Approx(2.0));
    // Retuned before the first step; the initial epoch entry absorbs it.
    CHECK(learner.epoch_starts().size() == 1);
  }
  SUBCASE("a big jump doubles three times") {
    DoublingIpLearner learner("dbl", barrier, VectorXd::Zero(2), 1.0,
                              barrier.theta(), barrier.diameter(), 64);
    learner.observe(LossFunction::linear(vec2(5.0, 0.0)));
    CHECK(learner.current_grad_bound() == doctest::Approx(8.0));
  }
  SUBCASE("no violation: trajectory identical to the unwrapped learner") {
    const int T = 64;
    auto losses = AdversaryScript::iid_linear(T, 5, 1.0).generate(box);
    DoublingIpLearner wrapped("dbl", barrier, VectorXd::Zero(2), 1.0,
                              barrier.theta(), barrier.diameter(), T);
    IpLearner plain("ip", barrier,
                    tune_rate(barrier.theta(), 1.0, barrier.diameter(), T),
                    VectorXd::Zero(2));
    for (const auto& f : losses) {
      wrapped.observe(f);
      plain.observe(f);
      CHECK((wrapped.current() - plain.current()).norm() == 0.0);
    }
    CHECK(wrapped.epoch_starts().size() == 1);
    CHECK(wrapped.current_grad_bound() == doctest::Approx(1.0));
  }
}

TEST_CASE("doubling wrapper retunes mid-run and keeps playing") {
  Domain box = unit_box(2);
  Barrier barrier(box);
  const int T = 128;
  // Script gradients have norm 2; the wrapper starts believing G = 0.5.
  auto losses = AdversaryScript::iid_linear(T, 13, 2.0).generate(box);
  DoublingIpLearner learner("dbl", barrier, VectorXd::Zero(2), 0.5,
                            barrier.theta(), barrier.diameter(), T);
  for (const auto& f : losses) learner.observe(f);
  CHECK(learner.current_grad_bound() == doctest::Approx(2.0));
  // Retuned on the very first round; the initial epoch entry absorbs it.
  CHECK(learner.epoch_starts().size() == 1);
  CHECK(box.is_interior(learner.current()));
  CHECK(learner.state().unsafe_steps == 0);

  // A late spike adds a real epoch boundary.
  learner.observe(LossFunction::linear(vec2(5.0, 0.0)));
  CHECK(learner.current_grad_bound() == doctest::Approx(8.0));
  REQUIRE(learner.epoch_starts().size() == 2);
  CHECK(learner.epoch_starts()[1] == T + 1);
}

TEST_CASE("IP iterates never leave the interior and never project") {
  // Validity sweep: the step norm stays below eta G diam and the slack
  // stays positive across a long adversarial run.
  Domain box = unit_box(2);
  Barrier barrier(box);
  const int T = 512;
  auto losses = AdversaryScript::iid_linear(T, 91, 1.0).generate(box);
  TuningConstants tuning = tune_rate(barrier.theta(), 1.0, barrier.diameter(), T);
  IpLearner learner("ip", barrier, tuning, VectorXd::Zero(2));
  const double cap = tuning.eta * tuning.grad_bound * tuning.diameter + 1e-9;
  for (const auto& f : losses) {
    learner.observe(f);
    CHECK(box.min_slack(learner.current()) > 0.0);
    CHECK(learner.last_step_local_norm() < 1.0);
    CHECK(learner.last_step_local_norm() <= cap);
  }
  CHECK(learner.state().unsafe_steps == 0);
}

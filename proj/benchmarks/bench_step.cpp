// Per-round cost of the interior-point step across problem sizes: barrier
// evaluation (Hessian assembly) plus the order-n SPD solve.

#include <benchmark/benchmark.h>

#include <cmath>

#include "dikin/dikin.hpp"

using namespace dikin;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

Domain general_form_box(int n) {
  MatrixXd A(2 * n, n);
  A.topRows(n) = MatrixXd::Identity(n, n);
  A.bottomRows(n) = -MatrixXd::Identity(n, n);
  VectorXd b = VectorXd::Constant(2 * n, -1.0);
  return Domain::polytope(A, b, VectorXd::Zero(n), 2.0 * std::sqrt(double(n)));
}

void BM_PolytopeBarrierEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Domain domain = general_form_box(n);
  Barrier barrier(domain);
  VectorXd x = VectorXd::Constant(n, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(barrier.eval(x));
  }
}
BENCHMARK(BM_PolytopeBarrierEval)->Arg(10)->Arg(50)->Arg(100)->Arg(200)
    ->Unit(benchmark::kMicrosecond);

void BM_HessianSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Domain domain = general_form_box(n);
  Barrier barrier(domain);
  MatrixXd H = barrier.eval(VectorXd::Constant(n, 0.1)).hessian;
  Rng rng(1);
  VectorXd g = rng.gaussian(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hessian_solve(H, g));
  }
}
BENCHMARK(BM_HessianSolve)->Arg(10)->Arg(50)->Arg(100)->Arg(200)
    ->Unit(benchmark::kMicrosecond);

void BM_IpRound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Domain domain = general_form_box(n);
  Barrier barrier(domain);
  const int T = 1 << 16;
  TuningConstants tuning = tune_rate(barrier.theta(), 1.0, barrier.diameter(), T);
  IpLearner learner("ip", barrier, tuning, VectorXd::Zero(n));
  Rng rng(2);
  for (auto _ : state) {
    LossFunction f = LossFunction::linear(rng.unit_sphere(n));
    learner.observe(f);
  }
}
BENCHMARK(BM_IpRound)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_BoxIpRound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Domain domain = Domain::box(VectorXd::Constant(n, -1.0),
                              VectorXd::Constant(n, 1.0));
  Barrier barrier(domain);
  const int T = 1 << 16;
  TuningConstants tuning = tune_rate(barrier.theta(), 1.0, barrier.diameter(), T);
  IpLearner learner("ip", barrier, tuning, VectorXd::Zero(n));
  Rng rng(3);
  for (auto _ : state) {
    LossFunction f = LossFunction::linear(rng.unit_sphere(n));
    learner.observe(f);
  }
}
BENCHMARK(BM_BoxIpRound)->Arg(100)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

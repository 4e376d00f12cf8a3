#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace dikin {

/// Seeded random stream. Property suites and adversaries draw everything
/// through one of these so a run is reproducible from its config seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  Eigen::VectorXd gaussian(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

  /// Uniform direction on the unit sphere (normalized Gaussian draw).
  Eigen::VectorXd unit_sphere(int n) {
    Eigen::VectorXd v = gaussian(n);
    double norm = v.norm();
    while (norm < 1e-12) {
      v = gaussian(n);
      norm = v.norm();
    }
    return v / norm;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dikin

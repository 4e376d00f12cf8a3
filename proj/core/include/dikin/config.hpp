#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dikin/harness.hpp"

namespace dikin {

/// Parses the JSON experiment description. Documented keys:
///   domain.kind: "box" | "ball" | "polytope"
///   domain.bounds.lower / domain.bounds.upper   (box)
///   domain.center / domain.radius               (ball)
///   domain.A / domain.b / domain.interior_point / domain.diameter (polytope)
///   adversary.kind: "iid_linear" | "alternating" | "piecewise_linear" |
///                   "fixed_quadratic"
///   adversary.params.*  (scale; segments[].length, segments[].c; Q, optimum)
///   learner[]: {kind, label?, eta?, grad_bound?, divergence_bound?, g0?}
///   horizon, seed, x1?, out?
/// Throws ConfigParseError naming the offending key.
ExperimentConfig parse_experiment_config(const std::string& json_text);

/// Reads a config file, applying optional seed/horizon overrides before
/// interpretation (so the adversary is rebuilt consistently).
ExperimentConfig load_experiment_config(
    const std::string& path, std::optional<std::uint64_t> seed_override = {},
    std::optional<int> horizon_override = {});

/// Inverse of parse_experiment_config: a parse -> serialize -> parse round
/// trip yields a trace-identical experiment.
std::string serialize_experiment_config(const ExperimentConfig& config);

/// Sweep description: one base experiment instantiated over the cross
/// product of horizons and seeds.
struct SweepConfig {
  std::vector<int> horizons;
  std::vector<std::uint64_t> seeds;
  std::string base_json;
};

SweepConfig load_sweep_config(const std::string& path);
SweepConfig parse_sweep_config(const std::string& json_text);
ExperimentConfig instantiate_sweep_point(const SweepConfig& sweep, int horizon,
                                         std::uint64_t seed);

}  // namespace dikin

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dikin {

/// One row of the verification table. `worst_slack` is the smallest margin
/// by which the property held (negative means violated beyond tolerance).
struct PropertyCheck {
  std::string name;
  bool passed = false;
  double worst_slack = 0.0;
  long samples = 0;
  std::string detail;
};

struct VerifyOptions {
  /// Base sample count; individual rows use fixed multiples of it.
  int samples = 1000;
  std::uint64_t seed = 7;
  /// Fault-injection hook for the derivative rows: scales the analytic
  /// gradient before comparison. 1.0 means no corruption.
  double gradient_scale = 1.0;
};

/// Runs every numeric property check (barrier derivatives, self-concordance,
/// Dikin/Hessian bounds, boundary growth, Bregman identities, comparator
/// shift, step validity, trajectory inequalities, projections, losses, FTL
/// behavior) and returns one row per property.
std::vector<PropertyCheck> run_verification_suite(const VerifyOptions& options);

void print_property_table(std::ostream& out,
                          const std::vector<PropertyCheck>& checks);

bool all_passed(const std::vector<PropertyCheck>& checks);

}  // namespace dikin

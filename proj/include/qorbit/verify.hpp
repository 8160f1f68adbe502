#pragma once

// Randomized verification of every structural property of the toolkit:
// quaternion identities, the Lie algebra and group laws, the coadjoint action,
// the symplectic certificates, the bracket coincidence and the dynamics.
//
// Each property reports the maximum residual over its trials and passes iff
// max_residual <= tolerance. Properties that bound a quantity from below
// (singular values, distances, convergence ratios) report the shortfall
// against the bound as their residual, with tolerance 0.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qorbit {

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Extra statistics (bounds, measured values, calibrated signs).
  std::vector<std::pair<std::string, double>> details;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  /// Replaces every tolerance.
  std::optional<double> tolerance_all;
  /// Per-property replacements, applied after tolerance_all.
  std::map<std::string, double> tolerance_overrides;
  /// Worker threads for trial loops; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  /// Calibrated sign of the Liouville pullback (see liouville_sign()).
  int liouville_sign = 0;
  std::vector<PropertyResult> properties;

  bool all_pass() const;
  std::vector<std::string> failures() const;
};

/// Names and default tolerances of all properties, in report order.
const std::vector<std::pair<std::string, double>>& property_catalog();

/// Throws ConfigError for zero trials, unknown override names or negative
/// tolerances.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace qorbit

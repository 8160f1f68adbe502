#pragma once

// Deterministic sampling for the randomized verification trials.
//
// The generator is std::mt19937_64 seeded through SplitMix64. Streams are
// split by mixing a stream id into the parent seed, so trial k of property P
// under root seed S always sees the same numbers regardless of thread
// scheduling. Doubles are formed from the top 53 bits, which avoids the
// implementation-defined std::uniform_real_distribution. Changing any of this
// changes every verification report.

#include <cstdint>
#include <random>
#include <string_view>

#include "qorbit/coadjoint.hpp"

namespace qorbit {

std::uint64_t splitmix64(std::uint64_t x);
/// FNV-1a, used to turn property names into stream ids.
std::uint64_t stream_id(std::string_view name);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  Rng split(std::uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x9e3779b97f4a7c15ULL)));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

Quaternion random_quaternion(Rng& rng, double lo = -1.0, double hi = 1.0);
PureQuaternion random_pure(Rng& rng, double lo = -1.0, double hi = 1.0);
/// Uniform direction on S3 (rejection from the cube).
UnitQuaternion random_unit(Rng& rng);
GroupElement random_group(Rng& rng);
AlgebraElement random_algebra(Rng& rng);
/// Components uniform in [lo, hi].
DualElement random_dual(Rng& rng, double lo = -1.0, double hi = 1.0);
/// |pi| uniform in [rho_min, rho_max] with uniform direction, mu in [-1, 1]^3.
DualElement random_type2(Rng& rng, double rho_min = 0.1, double rho_max = 10.0);

}  // namespace qorbit

#include "qorbit/random.hpp"

namespace qorbit {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_id(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Quaternion random_quaternion(Rng& rng, double lo, double hi) {
  const double w = rng.uniform(lo, hi);
  const double x = rng.uniform(lo, hi);
  const double y = rng.uniform(lo, hi);
  const double z = rng.uniform(lo, hi);
  return {w, x, y, z};
}

PureQuaternion random_pure(Rng& rng, double lo, double hi) {
  const double x = rng.uniform(lo, hi);
  const double y = rng.uniform(lo, hi);
  const double z = rng.uniform(lo, hi);
  return {x, y, z};
}

UnitQuaternion random_unit(Rng& rng) {
  for (;;) {
    const Quaternion q = random_quaternion(rng);
    const double n2 = inner(q, q);
    if (n2 > 0.01 && n2 <= 1.0) {
      return UnitQuaternion::renormalize(q);
    }
  }
}

GroupElement random_group(Rng& rng) {
  const Quaternion q = random_quaternion(rng);
  return {q, random_unit(rng)};
}

AlgebraElement random_algebra(Rng& rng) {
  const Quaternion nu = random_quaternion(rng);
  return {nu, random_pure(rng)};
}

DualElement random_dual(Rng& rng, double lo, double hi) {
  const Quaternion pi = random_quaternion(rng, lo, hi);
  return {pi, random_pure(rng, lo, hi)};
}

DualElement random_type2(Rng& rng, double rho_min, double rho_max) {
  const double rho = rng.uniform(rho_min, rho_max);
  const Quaternion direction = random_unit(rng).value();
  return {rho * direction, random_pure(rng)};
}

}  // namespace qorbit

#pragma once

// The dual g*, identified with g through the Euclidean pairing
// <(pi, mu), (nu, xi)> = <pi, nu> + <mu, xi>.

#include "qorbit/lie_group.hpp"

namespace qorbit {

/// |pi| at or below this value classifies a point as a type-1 (sphere) orbit.
inline constexpr double kZeroTolerance = 1e-12;

struct DualElement {
  Quaternion pi;
  PureQuaternion mu;

  friend bool operator==(const DualElement&, const DualElement&) = default;
};

inline DualElement operator+(const DualElement& a, const DualElement& b) {
  return {a.pi + b.pi, a.mu + b.mu};
}
inline DualElement operator-(const DualElement& a, const DualElement& b) {
  return {a.pi - b.pi, a.mu - b.mu};
}
inline DualElement operator-(const DualElement& a) { return {-a.pi, -a.mu}; }
inline DualElement operator*(double k, const DualElement& a) {
  return {k * a.pi, k * a.mu};
}

/// Flattened as (mu_1, mu_2, mu_3, pi_0, .., pi_3) so that the pairing with g
/// is the dot product of 7-vectors.
Vector7 to_vector(const DualElement& x);
DualElement dual_from_vector(const Vector7& c);

double norm(const DualElement& x);

/// Pairing of g* with g.
inline double pairing(const DualElement& x, const AlgebraElement& v) {
  return inner(x.pi, v.nu) + inner(x.mu, v.xi);
}

/// A tangent vector to g* at some point.
struct DualTangent {
  Quaternion dpi;
  PureQuaternion dmu;
};

enum class OrbitKind { Type1Sphere, Type2Bundle };

struct OrbitDescriptor {
  OrbitKind kind = OrbitKind::Type1Sphere;
  /// |mu| for sphere orbits, |pi| for the bundle orbits.
  double radius = 0.0;
};

const char* to_string(OrbitKind kind);

/// The coadjoint action x -> Ad*_{g^-1} x:
///   (pi s^dagger, s (mu - q^dagger pi) s^dagger + <q, pi>).
/// Satisfies coad(g h, x) = coad(g, coad(h, x)) and
/// <coad(g, x), Ad(g, v)> = <x, v>. Throws InvariantViolation if the scalar
/// part of the mu output fails to cancel.
DualElement coad(const GroupElement& g, const DualElement& x);

/// Velocity of t -> coad(exp_group(t v), x) at t = 0:
///   (-pi xi, -(2 mu x xi + Im(nu^dagger pi))).
DualTangent infinitesimal_generator(const AlgebraElement& v, const DualElement& x);

/// |pi|^2, constant on every coadjoint orbit.
double casimir(const DualElement& x);

OrbitDescriptor classify(const DualElement& x);

struct NormalForm {
  GroupElement reducer;  // (q0, s0) = (-pi mu / |pi|^2, pi / |pi|)
  DualElement reduced;   // coad(reducer, x) = (|pi| e0, 0)
};

/// Throws DomainError for type-1 points.
NormalForm normal_form(const DualElement& x);

/// rho (s^dagger, s q s^dagger): the point coad((q, s), (rho e0, 0)).
/// Throws DomainError for rho <= 0.
DualElement orbit_point(double rho, const PureQuaternion& q,
                        const UnitQuaternion& s);

}  // namespace qorbit

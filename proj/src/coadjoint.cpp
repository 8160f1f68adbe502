#include "qorbit/coadjoint.hpp"

#include <cmath>
#include <sstream>

#include "qorbit/errors.hpp"

namespace qorbit {

Vector7 to_vector(const DualElement& x) {
  Vector7 c;
  c << x.mu.x, x.mu.y, x.mu.z, x.pi.w, x.pi.x, x.pi.y, x.pi.z;
  return c;
}

DualElement dual_from_vector(const Vector7& c) {
  return {{c(3), c(4), c(5), c(6)}, {c(0), c(1), c(2)}};
}

double norm(const DualElement& x) {
  return std::sqrt(inner(x.pi, x.pi) + inner(x.mu, x.mu));
}

const char* to_string(OrbitKind kind) {
  switch (kind) {
    case OrbitKind::Type1Sphere:
      return "Type1Sphere";
    case OrbitKind::Type2Bundle:
      return "Type2Bundle";
  }
  return "unknown";
}

DualElement coad(const GroupElement& g, const DualElement& x) {
  const Quaternion& s = g.s.value();
  const Quaternion sd = conj(s);
  const Quaternion m =
      s * (embed(x.mu) - conj(g.q) * x.pi) * sd + inner(g.q, x.pi) * e0;
  const double tol = 1e-12 * (1.0 + norm(x)) * (1.0 + norm(g.q));
  if (std::abs(m.w) > tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "coadjoint action: scalar part of mu did not cancel (" << m.w << ")";
    throw InvariantViolation(msg.str());
  }
  return {x.pi * sd, im(m)};
}

DualTangent infinitesimal_generator(const AlgebraElement& v, const DualElement& x) {
  return {-(x.pi * v.xi), -(2.0 * cross(x.mu, v.xi) + im(conj(v.nu) * x.pi))};
}

double casimir(const DualElement& x) { return inner(x.pi, x.pi); }

OrbitDescriptor classify(const DualElement& x) {
  const double r = norm(x.pi);
  if (r <= kZeroTolerance) {
    return {OrbitKind::Type1Sphere, norm(x.mu)};
  }
  return {OrbitKind::Type2Bundle, r};
}

NormalForm normal_form(const DualElement& x) {
  const double r = norm(x.pi);
  if (r <= kZeroTolerance) {
    throw DomainError("normal form is undefined on type-1 (|pi| = 0) orbits");
  }
  const GroupElement reducer{-(x.pi * x.mu) / (r * r),
                             UnitQuaternion::renormalize(x.pi)};
  const DualElement reduced = coad(reducer, x);
  const DualElement target{r * e0, {}};
  if (norm(reduced - target) > 1e-10 * (1.0 + norm(x))) {
    throw InvariantViolation("normal form did not reach (|pi| e0, 0)");
  }
  return {reducer, reduced};
}

DualElement orbit_point(double rho, const PureQuaternion& q,
                        const UnitQuaternion& s) {
  if (!(rho > 0.0)) {
    throw DomainError("orbit radius must be positive");
  }
  return {rho * conj(s.value()), rho * rotate(s, q)};
}

}  // namespace qorbit

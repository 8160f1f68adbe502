#include "qorbit/quaternion.hpp"

#include <sstream>

#include "qorbit/errors.hpp"

namespace qorbit {

Quaternion Quaternion::checked(double w, double x, double y, double z) {
  Quaternion q{w, x, y, z};
  if (!q.is_finite()) {
    throw DomainError("quaternion component is not finite");
  }
  return q;
}

PureQuaternion PureQuaternion::checked(double x, double y, double z) {
  PureQuaternion v{x, y, z};
  if (!v.is_finite()) {
    throw DomainError("pure quaternion component is not finite");
  }
  return v;
}

Quaternion inverse(const Quaternion& a) {
  const double n2 = inner(a, a);
  if (n2 == 0.0) {
    throw DomainError("inverse of the zero quaternion");
  }
  return conj(a) / n2;
}

UnitQuaternion::UnitQuaternion(const Quaternion& q) : value_(q) {
  if (!q.is_finite() || std::abs(norm(q) - 1.0) > kTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "not a unit quaternion: |s| = " << norm(q);
    throw DomainError(msg.str());
  }
}

UnitQuaternion UnitQuaternion::renormalize(const Quaternion& q) {
  const double n = norm(q);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("cannot renormalize a zero or non-finite quaternion");
  }
  return UnitQuaternion(q / n, Trusted{});
}

UnitQuaternion UnitQuaternion::inverse() const {
  return UnitQuaternion(conj(value_), Trusted{});
}

PureQuaternion rotate(const UnitQuaternion& s, const PureQuaternion& v) {
  return im(mul(mul(s.value(), embed(v)), conj(s.value())));
}

UnitQuaternion exp_unit(const PureQuaternion& v) {
  const double angle = norm(v);
  if (angle == 0.0) {
    return UnitQuaternion();
  }
  const double k = std::sin(angle) / angle;
  return UnitQuaternion::renormalize({std::cos(angle), k * v.x, k * v.y, k * v.z});
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

std::ostream& operator<<(std::ostream& os, const PureQuaternion& q) {
  return os << '[' << q.x << ", " << q.y << ", " << q.z << ']';
}

}  // namespace qorbit

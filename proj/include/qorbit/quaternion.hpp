#pragma once

// Quaternion arithmetic over H, the pure subspace H0 and the unit sphere S3.
//
// Components are always ordered (w, x, y, z) along (e0, e1, e2, e3) and the
// product follows Hamilton's convention e1 e2 = e3. Pure quaternions carry
// (x, y, z) only and embed into H with w = 0 exactly.

#include <array>
#include <cmath>
#include <ostream>

namespace qorbit {

struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static constexpr Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }
  /// Throws DomainError when a component is NaN or infinite.
  static Quaternion checked(double w, double x, double y, double z);
  static Quaternion from_array(const std::array<double, 4>& c) {
    return {c[0], c[1], c[2], c[3]};
  }

  std::array<double, 4> to_array() const { return {w, x, y, z}; }
  bool is_finite() const {
    return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) &&
           std::isfinite(z);
  }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

struct PureQuaternion {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static PureQuaternion checked(double x, double y, double z);
  static PureQuaternion from_array(const std::array<double, 3>& c) {
    return {c[0], c[1], c[2]};
  }

  std::array<double, 3> to_array() const { return {x, y, z}; }
  bool is_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }

  friend bool operator==(const PureQuaternion&, const PureQuaternion&) =
      default;
};

// Basis elements.
inline constexpr Quaternion e0{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion e1{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion e2{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion e3{0.0, 0.0, 0.0, 1.0};

inline constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
inline constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
inline constexpr Quaternion operator-(const Quaternion& a) {
  return {-a.w, -a.x, -a.y, -a.z};
}
inline constexpr Quaternion operator*(double k, const Quaternion& a) {
  return {k * a.w, k * a.x, k * a.y, k * a.z};
}
inline constexpr Quaternion operator*(const Quaternion& a, double k) {
  return k * a;
}
inline constexpr Quaternion operator/(const Quaternion& a, double k) {
  return {a.w / k, a.x / k, a.y / k, a.z / k};
}

/// Hamilton product.
inline constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
inline constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return mul(a, b);
}

inline constexpr PureQuaternion operator+(const PureQuaternion& a,
                                          const PureQuaternion& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline constexpr PureQuaternion operator-(const PureQuaternion& a,
                                          const PureQuaternion& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline constexpr PureQuaternion operator-(const PureQuaternion& a) {
  return {-a.x, -a.y, -a.z};
}
inline constexpr PureQuaternion operator*(double k, const PureQuaternion& a) {
  return {k * a.x, k * a.y, k * a.z};
}
inline constexpr PureQuaternion operator*(const PureQuaternion& a, double k) {
  return k * a;
}
inline constexpr PureQuaternion operator/(const PureQuaternion& a, double k) {
  return {a.x / k, a.y / k, a.z / k};
}

/// The inclusion H0 -> H (w = 0).
inline constexpr Quaternion embed(const PureQuaternion& v) {
  return {0.0, v.x, v.y, v.z};
}
inline constexpr double re(const Quaternion& a) { return a.w; }
inline constexpr PureQuaternion im(const Quaternion& a) {
  return {a.x, a.y, a.z};
}

// Mixed products with a pure factor go through the embedding.
inline constexpr Quaternion operator*(const Quaternion& a,
                                      const PureQuaternion& b) {
  return mul(a, embed(b));
}
inline constexpr Quaternion operator*(const PureQuaternion& a,
                                      const Quaternion& b) {
  return mul(embed(a), b);
}
inline constexpr Quaternion operator*(const PureQuaternion& a,
                                      const PureQuaternion& b) {
  return mul(embed(a), embed(b));
}

/// Quaternion conjugate (written with a dagger in the literature).
inline constexpr Quaternion conj(const Quaternion& a) {
  return {a.w, -a.x, -a.y, -a.z};
}

/// Euclidean scalar product on H viewed as R^4.
inline constexpr double inner(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}
inline constexpr double inner(const PureQuaternion& a, const PureQuaternion& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(const Quaternion& a) { return std::sqrt(inner(a, a)); }
inline double norm(const PureQuaternion& a) { return std::sqrt(inner(a, a)); }

/// 3-vector cross product; equals (xi eta - eta xi) / 2 in H.
inline constexpr PureQuaternion cross(const PureQuaternion& a,
                                      const PureQuaternion& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Multiplicative inverse; throws DomainError for the zero quaternion.
Quaternion inverse(const Quaternion& a);

/// Element of S3. Construction validates the norm; it never normalizes.
class UnitQuaternion {
 public:
  static constexpr double kTolerance = 1e-12;

  UnitQuaternion() = default;
  /// Throws DomainError unless | |q| - 1 | <= kTolerance.
  explicit UnitQuaternion(const Quaternion& q);

  /// Explicit projection onto S3; throws DomainError for a (near) zero input.
  static UnitQuaternion renormalize(const Quaternion& q);

  const Quaternion& value() const { return value_; }
  operator const Quaternion&() const { return value_; }  // NOLINT

  /// Conjugate, which is also the group inverse on S3.
  UnitQuaternion inverse() const;

  friend bool operator==(const UnitQuaternion&, const UnitQuaternion&) =
      default;

 private:
  struct Trusted {};
  UnitQuaternion(const Quaternion& q, Trusted) : value_(q) {}

  Quaternion value_ = Quaternion::identity();
};

inline Quaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
  return mul(a.value(), b.value());
}

/// s xi s^dagger: the SO(3) action of S3 on H0.
PureQuaternion rotate(const UnitQuaternion& s, const PureQuaternion& v);

/// Unit quaternion exponential cos|xi| + sin|xi| xi/|xi| (xi pure).
UnitQuaternion exp_unit(const PureQuaternion& v);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const PureQuaternion& q);

}  // namespace qorbit

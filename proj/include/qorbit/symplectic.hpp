#pragma once

// The Kirillov-Kostant-Souriau form on coadjoint orbits, its primitive theta
// on the type-2 orbits, finite-difference certificates for omega = -d theta,
// and the map to the cotangent bundle of the 3-sphere of radius |pi|.

#include "qorbit/coadjoint.hpp"

namespace qorbit {

/// Central-difference settings shared by the numeric certificates.
struct FdOptions {
  static constexpr double kMaxStep = 1e-3;

  double step = 1e-4;
  /// Combine steps h and h/2 as (4 D(h/2) - D(h)) / 3.
  bool richardson = false;
};

/// omega_x(v_g*, w_g*) = -<x, [v, w]>.
double kks_form(const DualElement& x, const AlgebraElement& v,
                const AlgebraElement& w);

/// theta_x(v_g*) = -<mu, xi>. Throws DomainError on type-1 points.
double theta(const DualElement& x, const AlgebraElement& v);

/// Exterior derivative of theta on the generators of v and w,
///   d theta(v_g*, w_g*) = v_g*[theta(w_g*)] - w_g*[theta(v_g*)]
///                         + theta([v, w]_g*),
/// with the directional derivatives taken by central differences along
/// t -> coad(exp_group(t v), x). The last term uses
/// [v_g*, w_g*] = -[v, w]_g*.
///
/// Throws DomainError on type-1 points, for a step outside (0, 1e-3], or
/// when the rounding estimate eps * scale / h shows the step is too small.
double d_theta_numeric(const DualElement& x, const AlgebraElement& v,
                       const AlgebraElement& w, const FdOptions& fd = {});

/// d omega(u, v, w) evaluated with finite-difference directional derivatives.
/// Vanishes for a closed form.
double d_omega_numeric(const DualElement& x, const AlgebraElement& u,
                       const AlgebraElement& v, const AlgebraElement& w,
                       const FdOptions& fd = {});

/// Rank of the generator map at x and the conditioning of omega restricted
/// to the orbit tangent space.
struct OrbitTangentAnalysis {
  int orbit_dimension = 0;
  /// Singular values of v -> v_g*(x), descending.
  Vector7 generator_singular_values;
  /// Smallest singular value of the Gram matrix of omega over an
  /// orthonormal basis of a complement of the stabilizer.
  double gram_sigma_min = 0.0;
};

OrbitTangentAnalysis analyze_orbit_tangent(const DualElement& x);

/// A covector on the sphere S3_rho, stored by base point and ambient
/// representative orthogonal to the base. The pairing with a tangent dp is
/// inner(covec, dp).
class CotangentPoint {
 public:
  static constexpr double kRadiusTolerance = 1e-10;

  /// Projects covec orthogonally to base. Throws DomainError if base is zero
  /// or if rho does not match |base|.
  CotangentPoint(const Quaternion& base, const Quaternion& covec, double rho);

  const Quaternion& base() const { return base_; }
  const Quaternion& covec() const { return covec_; }
  double radius() const { return rho_; }

  double pair(const Quaternion& tangent) const { return inner(covec_, tangent); }

 private:
  Quaternion base_;
  Quaternion covec_;
  double rho_;
};

/// (pi, mu) -> (pi, -pi mu / |pi|^2). Throws DomainError on type-1 points.
CotangentPoint phi(const DualElement& x);

/// Sign sigma with Theta(phi_* v_g*) = sigma theta(v_g*) for the map phi as
/// implemented on +(pi, mu). Computed once, numerically, at the reference
/// point (e0, e3) with v = (0, eps_3).
int liouville_sign();

/// Measures the same sign at an arbitrary reference configuration; exposed
/// for tests of the calibration itself.
int calibrate_liouville_sign(const DualElement& x, const AlgebraElement& v,
                             const FdOptions& fd = {});

/// Theta evaluated on the pushforward of v_g* under phi:
/// inner(phi(x).covec, d/dt phi(x(t)).base) with x(t) = coad(exp_group(t v), x).
double liouville_form_on_pushforward(const DualElement& x, const AlgebraElement& v,
                                     const FdOptions& fd = {});

/// |Theta(phi_* v_g*) - liouville_sign() * theta(v_g*)|.
double liouville_pullback_residual(const DualElement& x, const AlgebraElement& v,
                                   const FdOptions& fd = {});

}  // namespace qorbit

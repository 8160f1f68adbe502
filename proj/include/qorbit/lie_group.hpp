#pragma once

// The group G = S3 x| H of pairs (q, s) with product
//   (q, s)(q', s') = (q' + q s', s s'),
// i.e. the quaternionic matrices [[1, q], [0, s]], and its 7-dimensional Lie
// algebra g of pairs (nu, xi) in H (+) H0, i.e. [[0, nu], [0, xi]].
//
// Basis indices 0..2 are eps_1..eps_3 (the xi directions) and 3..6 are
// e_0..e_3 (the nu directions). The same ordering is used whenever an element
// of g or g* is flattened to a 7-vector.

#include <array>
#include <vector>

#include <Eigen/Core>

#include "qorbit/quaternion.hpp"

namespace qorbit {

using Vector7 = Eigen::Matrix<double, 7, 1>;
using Matrix7 = Eigen::Matrix<double, 7, 7>;

inline constexpr int kAlgebraDim = 7;

struct AlgebraElement {
  Quaternion nu;
  PureQuaternion xi;

  static AlgebraElement basis(int index);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) =
      default;
};

inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  return {a.nu + b.nu, a.xi + b.xi};
}
inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  return {a.nu - b.nu, a.xi - b.xi};
}
inline AlgebraElement operator-(const AlgebraElement& a) {
  return {-a.nu, -a.xi};
}
inline AlgebraElement operator*(double k, const AlgebraElement& a) {
  return {k * a.nu, k * a.xi};
}

Vector7 to_vector(const AlgebraElement& v);
AlgebraElement algebra_from_vector(const Vector7& c);

struct GroupElement {
  Quaternion q;
  UnitQuaternion s;

  static GroupElement identity() { return {}; }
};

/// [v, v'] = (nu xi' - nu' xi, 2 xi x xi').
AlgebraElement bracket(const AlgebraElement& v, const AlgebraElement& w);

/// ad_v w; identical to bracket(v, w).
inline AlgebraElement ad(const AlgebraElement& v, const AlgebraElement& w) {
  return bracket(v, w);
}

/// Integer structure constants c^k_ij with [b_i, b_j] = sum_k c^k_ij b_k,
/// tabulated from the basis relations
///   [eps_i, eps_j] = 2 eps_ijk eps_k,   [eps_i, e_0] = -e_i,
///   [eps_i, e_j] = delta_ij e_0 + eps_ijk e_k,   [e_a, e_b] = 0,
/// and antisymmetry. Independent of the quaternionic bracket above.
class StructureConstants {
 public:
  StructureConstants();

  int operator()(int i, int j, int k) const { return c_[i][j][k]; }

  struct Entry {
    int i, j, k, c;
  };
  /// Nonzero entries over all ordered pairs (i, j).
  std::vector<Entry> nonzero() const;

 private:
  std::array<std::array<std::array<int, 7>, 7>, 7> c_{};
};

const StructureConstants& structure_constants();

GroupElement group_mul(const GroupElement& g, const GroupElement& h);
GroupElement group_inv(const GroupElement& g);
/// g h g^-1 = ((q' - q + q s') s^-1, s s' s^-1).
GroupElement inner_auto(const GroupElement& g, const GroupElement& h);

/// Ad_(q,s)(nu, xi) = ((nu + q xi) s^dagger, s xi s^dagger).
AlgebraElement Ad(const GroupElement& g, const AlgebraElement& v);

/// Matrix exponential of [[0, nu], [0, xi]]:
/// (nu phi(xi), exp(xi)) with phi(xi) = (exp(xi) - 1) xi^-1.
GroupElement exp_group(const AlgebraElement& v);

/// <xi, xi'> + <nu, nu'>.
double algebra_inner(const AlgebraElement& v, const AlgebraElement& w);

double norm(const AlgebraElement& v);

}  // namespace qorbit

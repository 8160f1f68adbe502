#include "qorbit/lie_group.hpp"

#include <cmath>
#include <stdexcept>

namespace qorbit {

namespace {

constexpr double kSeriesThreshold = 1e-4;

// Levi-Civita symbol on 1-based indices.
int levi_civita(int i, int j, int k) {
  return (i - j) * (j - k) * (k - i) / 2;
}

}  // namespace

AlgebraElement AlgebraElement::basis(int index) {
  Vector7 c = Vector7::Zero();
  c(index) = 1.0;
  return algebra_from_vector(c);
}

Vector7 to_vector(const AlgebraElement& v) {
  Vector7 c;
  c << v.xi.x, v.xi.y, v.xi.z, v.nu.w, v.nu.x, v.nu.y, v.nu.z;
  return c;
}

AlgebraElement algebra_from_vector(const Vector7& c) {
  return {{c(3), c(4), c(5), c(6)}, {c(0), c(1), c(2)}};
}

AlgebraElement bracket(const AlgebraElement& v, const AlgebraElement& w) {
  return {v.nu * w.xi - w.nu * v.xi, 2.0 * cross(v.xi, w.xi)};
}

StructureConstants::StructureConstants() {
  // eps_i has index i-1, e_a has index 3+a.
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        c_[i - 1][j - 1][k - 1] = 2 * levi_civita(i, j, k);
      }
      // [eps_i, e_j] = delta_ij e_0 + eps_ijk e_k
      c_[i - 1][3 + j][3] += (i == j) ? 1 : 0;
      for (int k = 1; k <= 3; ++k) {
        c_[i - 1][3 + j][3 + k] += levi_civita(i, j, k);
      }
    }
    // [eps_i, e_0] = -e_i
    c_[i - 1][3][3 + i] = -1;
  }
  // Antisymmetry fills [e_a, eps_i].
  for (int i = 0; i < 3; ++i) {
    for (int a = 3; a < 7; ++a) {
      for (int k = 0; k < 7; ++k) {
        c_[a][i][k] = -c_[i][a][k];
      }
    }
  }
}

std::vector<StructureConstants::Entry> StructureConstants::nonzero() const {
  std::vector<Entry> out;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      for (int k = 0; k < 7; ++k) {
        if (c_[i][j][k] != 0) {
          out.push_back({i, j, k, c_[i][j][k]});
        }
      }
    }
  }
  return out;
}

const StructureConstants& structure_constants() {
  static const StructureConstants table;
  return table;
}

GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
  return {h.q + g.q * h.s.value(), UnitQuaternion(g.s * h.s)};
}

GroupElement group_inv(const GroupElement& g) {
  const UnitQuaternion s_inv = g.s.inverse();
  return {-(g.q * s_inv.value()), s_inv};
}

GroupElement inner_auto(const GroupElement& g, const GroupElement& h) {
  const UnitQuaternion s_inv = g.s.inverse();
  const Quaternion q = (h.q - g.q + g.q * h.s.value()) * s_inv.value();
  const UnitQuaternion s(g.s.value() * h.s.value() * s_inv.value());
  return {q, s};
}

AlgebraElement Ad(const GroupElement& g, const AlgebraElement& v) {
  return {(v.nu + g.q * v.xi) * conj(g.s.value()), rotate(g.s, v.xi)};
}

GroupElement exp_group(const AlgebraElement& v) {
  const double angle = norm(v.xi);
  const double a2 = angle * angle;
  double sinc;       // sin(t) / t
  double half_vers;  // (1 - cos t) / t^2
  if (angle < kSeriesThreshold) {
    sinc = 1.0 - a2 / 6.0 + a2 * a2 / 120.0;
    half_vers = 0.5 - a2 / 24.0 + a2 * a2 / 720.0;
  } else {
    const double h = std::sin(0.5 * angle);
    sinc = std::sin(angle) / angle;
    half_vers = 2.0 * h * h / a2;
  }
  const Quaternion rotation{std::cos(angle), sinc * v.xi.x, sinc * v.xi.y,
                            sinc * v.xi.z};
  // phi(xi) = sum_n xi^n / (n+1)! = sinc + half_vers xi
  const Quaternion phi{sinc, half_vers * v.xi.x, half_vers * v.xi.y,
                       half_vers * v.xi.z};
  return {v.nu * phi, UnitQuaternion::renormalize(rotation)};
}

double algebra_inner(const AlgebraElement& v, const AlgebraElement& w) {
  return inner(v.xi, w.xi) + inner(v.nu, w.nu);
}

double norm(const AlgebraElement& v) { return std::sqrt(algebra_inner(v, v)); }

}  // namespace qorbit

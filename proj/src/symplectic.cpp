#include "qorbit/symplectic.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include <Eigen/SVD>

#include "qorbit/errors.hpp"

namespace qorbit {

namespace {

constexpr double kRoundingLimit = 1e-8;

void require_type2(const DualElement& x, const char* what) {
  if (norm(x.pi) <= kZeroTolerance) {
    throw DomainError(std::string(what) + " is undefined on type-1 (|pi| = 0) orbits");
  }
}

void require_step(const FdOptions& fd) {
  if (!(fd.step > 0.0) || fd.step > FdOptions::kMaxStep) {
    throw DomainError("finite-difference step must lie in (0, 1e-3]");
  }
}

DualElement flow(const DualElement& x, const AlgebraElement& v, double t) {
  return coad(exp_group(t * v), x);
}

// d/dt f(coad(exp_group(t v), x)) at t = 0.
double directional_derivative(const std::function<double(const DualElement&)>& f,
                              const DualElement& x, const AlgebraElement& v,
                              const FdOptions& fd) {
  require_step(fd);
  auto central = [&](double h) {
    const double plus = f(flow(x, v, h));
    const double minus = f(flow(x, v, -h));
    const double rounding = std::numeric_limits<double>::epsilon() *
                            (1.0 + std::abs(plus) + std::abs(minus)) / h;
    if (rounding > kRoundingLimit) {
      throw DomainError("finite-difference step too small: rounding dominates");
    }
    return (plus - minus) / (2.0 * h);
  };
  const double coarse = central(fd.step);
  if (!fd.richardson) {
    return coarse;
  }
  return (4.0 * central(0.5 * fd.step) - coarse) / 3.0;
}

}  // namespace

double kks_form(const DualElement& x, const AlgebraElement& v,
                const AlgebraElement& w) {
  return -pairing(x, bracket(v, w));
}

double theta(const DualElement& x, const AlgebraElement& v) {
  require_type2(x, "theta");
  return -inner(x.mu, v.xi);
}

double d_theta_numeric(const DualElement& x, const AlgebraElement& v,
                       const AlgebraElement& w, const FdOptions& fd) {
  require_type2(x, "d theta");
  // theta(w_g*) as a function on the orbit depends only on mu.
  auto theta_on = [](const AlgebraElement& u) {
    return [u](const DualElement& y) { return -inner(y.mu, u.xi); };
  };
  const double v_of_theta_w = directional_derivative(theta_on(w), x, v, fd);
  const double w_of_theta_v = directional_derivative(theta_on(v), x, w, fd);
  return v_of_theta_w - w_of_theta_v + theta(x, bracket(v, w));
}

double d_omega_numeric(const DualElement& x, const AlgebraElement& u,
                       const AlgebraElement& v, const AlgebraElement& w,
                       const FdOptions& fd) {
  auto omega_on = [](const AlgebraElement& a, const AlgebraElement& b) {
    return [a, b](const DualElement& y) { return kks_form(y, a, b); };
  };
  const double derivatives = directional_derivative(omega_on(v, w), x, u, fd) -
                             directional_derivative(omega_on(u, w), x, v, fd) +
                             directional_derivative(omega_on(u, v), x, w, fd);
  // omega([X, Y], Z) with [X, Y] = -[u, v]_g*, and cyclically.
  const double brackets = kks_form(x, bracket(u, v), w) -
                          kks_form(x, bracket(u, w), v) +
                          kks_form(x, bracket(v, w), u);
  return derivatives + brackets;
}

OrbitTangentAnalysis analyze_orbit_tangent(const DualElement& x) {
  Matrix7 generators;
  for (int j = 0; j < kAlgebraDim; ++j) {
    const DualTangent t = infinitesimal_generator(AlgebraElement::basis(j), x);
    generators.col(j) = to_vector(DualElement{t.dpi, t.dmu});
  }
  Eigen::JacobiSVD<Matrix7> svd(generators, Eigen::ComputeFullV);
  OrbitTangentAnalysis out;
  out.generator_singular_values = svd.singularValues();
  const double largest = out.generator_singular_values(0);
  for (int i = 0; i < kAlgebraDim; ++i) {
    if (out.generator_singular_values(i) > 1e-9 * largest) {
      ++out.orbit_dimension;
    }
  }
  const int n = out.orbit_dimension;
  if (n == 0) {
    return out;
  }
  // The leading right singular vectors span a complement of the stabilizer.
  Eigen::MatrixXd gram(n, n);
  for (int a = 0; a < n; ++a) {
    const AlgebraElement va = algebra_from_vector(svd.matrixV().col(a));
    for (int b = 0; b < n; ++b) {
      gram(a, b) = kks_form(x, va, algebra_from_vector(svd.matrixV().col(b)));
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> gram_svd(gram);
  out.gram_sigma_min = gram_svd.singularValues()(n - 1);
  return out;
}

CotangentPoint::CotangentPoint(const Quaternion& base, const Quaternion& covec,
                               double rho)
    : base_(base), rho_(rho) {
  const double r = norm(base);
  if (!(r > 0.0) || std::abs(r - rho) > kRadiusTolerance * std::max(1.0, rho)) {
    throw DomainError("cotangent base point is not on the sphere of radius rho");
  }
  covec_ = covec - (inner(covec, base) / (r * r)) * base;
}

CotangentPoint phi(const DualElement& x) {
  require_type2(x, "phi");
  const double rho = norm(x.pi);
  return CotangentPoint(x.pi, -(x.pi * x.mu) / (rho * rho), rho);
}

double liouville_form_on_pushforward(const DualElement& x, const AlgebraElement& v,
                                     const FdOptions& fd) {
  require_type2(x, "Liouville pullback");
  const CotangentPoint c = phi(x);
  // Theta(dc) = inner(covec, d base), taken component by component.
  double total = 0.0;
  for (int a = 0; a < 4; ++a) {
    const double weight = c.covec().to_array()[a];
    if (weight == 0.0) {
      continue;
    }
    auto base_component = [a](const DualElement& y) {
      return phi(y).base().to_array()[a];
    };
    total += weight * directional_derivative(base_component, x, v, fd);
  }
  return total;
}

int calibrate_liouville_sign(const DualElement& x, const AlgebraElement& v,
                             const FdOptions& fd) {
  const double lhs = liouville_form_on_pushforward(x, v, fd);
  const double rhs = theta(x, v);
  if (std::abs(rhs) < 1e-3 || std::abs(std::abs(lhs) - std::abs(rhs)) > 1e-6) {
    throw InvariantViolation("Liouville sign calibration point is degenerate");
  }
  return (lhs * rhs > 0.0) ? 1 : -1;
}

int liouville_sign() {
  static const int sign =
      calibrate_liouville_sign(DualElement{e0, {0.0, 0.0, 1.0}},
                               AlgebraElement{{}, {0.0, 0.0, 1.0}});
  return sign;
}

double liouville_pullback_residual(const DualElement& x, const AlgebraElement& v,
                                   const FdOptions& fd) {
  return std::abs(liouville_form_on_pushforward(x, v, fd) -
                  liouville_sign() * theta(x, v));
}

}  // namespace qorbit

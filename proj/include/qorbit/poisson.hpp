#pragma once

// The minus Lie-Poisson bracket on functions over g*,
//   {F, G}(x) = -<x, [grad F(x), grad G(x)]>,
// and checks that it reproduces the canonical quaternionic brackets
//   {mu_i, mu_j} = -2 eps_ijk mu_k,   {mu_i, pi_0} = pi_i,
//   {mu_i, pi_j} = -pi_0 delta_ij - eps_ijk pi_k,   {pi_a, pi_b} = 0.

#include <functional>
#include <string>
#include <vector>

#include "qorbit/coadjoint.hpp"

namespace qorbit {

/// Coordinate functions on g*, numbered like the basis of g.
enum class Coord { mu1 = 0, mu2, mu3, pi0, pi1, pi2, pi3 };

const char* coord_name(Coord c);

/// A smooth function on g* with an optional analytic gradient and Hessian.
/// Gradients live in g through the pairing: grad F = (dF/dpi, dF/dmu).
class ScalarField {
 public:
  using Value = std::function<double(const DualElement&)>;
  using Gradient = std::function<AlgebraElement(const DualElement&)>;
  using Hessian = std::function<Matrix7(const DualElement&)>;

  static constexpr double kGradientStep = 1e-5;

  /// Gradient by central differences with step kGradientStep.
  ScalarField(std::string name, Value value);
  ScalarField(std::string name, Value value, Gradient gradient,
              Hessian hessian = {});

  static ScalarField coordinate(Coord c);
  /// <b, x> + c.
  static ScalarField linear(std::string name, const Vector7& b, double c = 0.0);
  /// x^T A x / 2 + <b, x> + c, A symmetrized.
  static ScalarField quadratic(std::string name, const Matrix7& a, const Vector7& b,
                               double c = 0.0);
  /// |pi|^2.
  static ScalarField casimir();

  const std::string& name() const { return name_; }
  double operator()(const DualElement& x) const { return value_(x); }
  AlgebraElement gradient(const DualElement& x) const;
  AlgebraElement numeric_gradient(const DualElement& x) const;
  Matrix7 hessian(const DualElement& x) const;

  bool has_analytic_gradient() const { return static_cast<bool>(gradient_); }
  bool has_hessian() const { return static_cast<bool>(hessian_); }

  /// Pointwise product; analytic derivatives propagate when both factors
  /// carry them.
  friend ScalarField operator*(const ScalarField& f, const ScalarField& g);
  /// a f + b g.
  static ScalarField combination(double a, const ScalarField& f, double b,
                                 const ScalarField& g);

 private:
  std::string name_;
  Value value_;
  Gradient gradient_;
  Hessian hessian_;
};

/// Fields registered once before evaluation. Registration checks analytic
/// gradients against central differences at fixed probe points.
class FieldRegistry {
 public:
  static constexpr double kGradientRelTolerance = 1e-5;

  /// Throws InvariantViolation if an analytic gradient disagrees with the
  /// finite-difference gradient.
  const ScalarField& add(ScalarField field);
  const std::vector<ScalarField>& fields() const { return fields_; }

 private:
  std::vector<ScalarField> fields_;
};

double lie_poisson_bracket(const AlgebraElement& grad_f,
                           const AlgebraElement& grad_g, const DualElement& x);
double lie_poisson_bracket(const ScalarField& f, const ScalarField& g,
                           const DualElement& x);

struct BracketReport {
  std::string lhs;
  std::string rhs;
  double value = 0.0;
  double expected = 0.0;
  double residual = 0.0;
};

/// Closed-form value of the canonical bracket {a, b} at x.
double canonical_bracket(Coord a, Coord b, const DualElement& x);

/// Every pair in the families (pi, pi), (mu, pi), (mu, mu), evaluated with the
/// Lie-Poisson bracket and compared with the canonical closed forms.
std::vector<BracketReport> base_bracket_table(const DualElement& x);

/// Gradient of {G, H} from analytic gradients and Hessians.
AlgebraElement bracket_gradient(const ScalarField& g, const ScalarField& h,
                                const DualElement& x);

/// |{F,{G,H}} + {G,{H,F}} + {H,{F,G}}| at x. Throws UnsupportedField unless
/// every field has an analytic gradient and Hessian.
double jacobi_residual(const ScalarField& f, const ScalarField& g,
                       const ScalarField& h, const DualElement& x);

/// The coordinate-free identities
///   {mu, <mu, xi>} = 2 mu x xi,   {pi, <mu, xi>} = pi xi,
///   {<pi, a>, <pi, b>} = 0,
/// checked component by component.
std::vector<BracketReport> quaternionic_bracket_forms(const DualElement& x,
                                                      const PureQuaternion& xi,
                                                      const Quaternion& a,
                                                      const Quaternion& b);

}  // namespace qorbit

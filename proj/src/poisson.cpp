#include "qorbit/poisson.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "qorbit/errors.hpp"

namespace qorbit {

namespace {

int levi_civita(int i, int j, int k) {
  return (i - j) * (j - k) * (k - i) / 2;
}

bool is_mu(Coord c) { return static_cast<int>(c) < 3; }
// 1-based index of mu_i, or 0..3 for pi_a.
int sub(Coord c) {
  const int n = static_cast<int>(c);
  return n < 3 ? n + 1 : n - 3;
}

double pi_component(const DualElement& x, int a) { return x.pi.to_array()[a]; }
double mu_component(const DualElement& x, int i) { return x.mu.to_array()[i - 1]; }

// {mu_i, b} for any coordinate b.
double canonical_mu_bracket(int i, Coord b, const DualElement& x) {
  if (is_mu(b)) {
    const int j = sub(b);
    double out = 0.0;
    for (int k = 1; k <= 3; ++k) {
      out += -2.0 * levi_civita(i, j, k) * mu_component(x, k);
    }
    return out;
  }
  const int a = sub(b);
  if (a == 0) {
    return pi_component(x, i);
  }
  double out = (i == a) ? -pi_component(x, 0) : 0.0;
  for (int k = 1; k <= 3; ++k) {
    out -= levi_civita(i, a, k) * pi_component(x, k);
  }
  return out;
}

const std::array<DualElement, 3>& probe_points() {
  static const std::array<DualElement, 3> points{
      DualElement{{0.3, -0.7, 0.2, 0.9}, {0.5, -0.4, 0.8}},
      DualElement{{1.5, 0.2, -1.1, 0.4}, {-1.2, 0.3, 0.6}},
      DualElement{{-0.05, 0.1, 0.02, -0.3}, {0.0, 2.0, -0.7}},
  };
  return points;
}

}  // namespace

const char* coord_name(Coord c) {
  static constexpr std::array<const char*, 7> names{"mu1", "mu2", "mu3", "pi0",
                                                    "pi1", "pi2", "pi3"};
  return names[static_cast<int>(c)];
}

ScalarField::ScalarField(std::string name, Value value)
    : name_(std::move(name)), value_(std::move(value)) {}

ScalarField::ScalarField(std::string name, Value value, Gradient gradient,
                         Hessian hessian)
    : name_(std::move(name)),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      hessian_(std::move(hessian)) {}

ScalarField ScalarField::coordinate(Coord c) {
  Vector7 b = Vector7::Zero();
  b(static_cast<int>(c)) = 1.0;
  return linear(coord_name(c), b);
}

ScalarField ScalarField::linear(std::string name, const Vector7& b, double c) {
  return ScalarField(
      std::move(name), [b, c](const DualElement& x) { return b.dot(to_vector(x)) + c; },
      [b](const DualElement&) { return algebra_from_vector(b); },
      [](const DualElement&) { return Matrix7::Zero().eval(); });
}

ScalarField ScalarField::quadratic(std::string name, const Matrix7& a,
                                   const Vector7& b, double c) {
  const Matrix7 sym = 0.5 * (a + a.transpose());
  return ScalarField(
      std::move(name),
      [sym, b, c](const DualElement& x) {
        const Vector7 v = to_vector(x);
        return 0.5 * v.dot(sym * v) + b.dot(v) + c;
      },
      [sym, b](const DualElement& x) {
        return algebra_from_vector(sym * to_vector(x) + b);
      },
      [sym](const DualElement&) { return sym; });
}

ScalarField ScalarField::casimir() {
  Matrix7 a = Matrix7::Zero();
  for (int k = 3; k < 7; ++k) {
    a(k, k) = 2.0;
  }
  return quadratic("|pi|^2", a, Vector7::Zero());
}

AlgebraElement ScalarField::numeric_gradient(const DualElement& x) const {
  const Vector7 base = to_vector(x);
  Vector7 grad;
  for (int k = 0; k < kAlgebraDim; ++k) {
    Vector7 plus = base;
    Vector7 minus = base;
    plus(k) += kGradientStep;
    minus(k) -= kGradientStep;
    grad(k) = (value_(dual_from_vector(plus)) - value_(dual_from_vector(minus))) /
              (2.0 * kGradientStep);
  }
  return algebra_from_vector(grad);
}

AlgebraElement ScalarField::gradient(const DualElement& x) const {
  return gradient_ ? gradient_(x) : numeric_gradient(x);
}

Matrix7 ScalarField::hessian(const DualElement& x) const {
  if (!hessian_) {
    throw UnsupportedField("field '" + name_ + "' has no analytic Hessian");
  }
  return hessian_(x);
}

ScalarField operator*(const ScalarField& f, const ScalarField& g) {
  ScalarField::Value value = [f, g](const DualElement& x) { return f(x) * g(x); };
  std::string name = "(" + f.name() + ")*(" + g.name() + ")";
  if (!f.has_analytic_gradient() || !g.has_analytic_gradient()) {
    return ScalarField(std::move(name), std::move(value));
  }
  ScalarField::Gradient gradient = [f, g](const DualElement& x) {
    return f(x) * g.gradient(x) + g(x) * f.gradient(x);
  };
  ScalarField::Hessian hessian;
  if (f.has_hessian() && g.has_hessian()) {
    hessian = [f, g](const DualElement& x) {
      const Vector7 df = to_vector(f.gradient(x));
      const Vector7 dg = to_vector(g.gradient(x));
      return (f(x) * g.hessian(x) + g(x) * f.hessian(x) + df * dg.transpose() +
              dg * df.transpose())
          .eval();
    };
  }
  return ScalarField(std::move(name), std::move(value), std::move(gradient),
                     std::move(hessian));
}

ScalarField ScalarField::combination(double a, const ScalarField& f, double b,
                                     const ScalarField& g) {
  std::ostringstream name;
  name << a << "*(" << f.name() << ")+" << b << "*(" << g.name() << ")";
  Value value = [=](const DualElement& x) { return a * f(x) + b * g(x); };
  if (!f.has_analytic_gradient() || !g.has_analytic_gradient()) {
    return ScalarField(name.str(), std::move(value));
  }
  Gradient gradient = [=](const DualElement& x) {
    return a * f.gradient(x) + b * g.gradient(x);
  };
  Hessian hessian;
  if (f.has_hessian() && g.has_hessian()) {
    hessian = [=](const DualElement& x) {
      return (a * f.hessian(x) + b * g.hessian(x)).eval();
    };
  }
  return ScalarField(name.str(), std::move(value), std::move(gradient),
                     std::move(hessian));
}

const ScalarField& FieldRegistry::add(ScalarField field) {
  if (field.has_analytic_gradient()) {
    for (const DualElement& x : probe_points()) {
      const Vector7 analytic = to_vector(field.gradient(x));
      const Vector7 numeric = to_vector(field.numeric_gradient(x));
      const double scale = std::max(1.0, analytic.lpNorm<Eigen::Infinity>());
      if ((analytic - numeric).lpNorm<Eigen::Infinity>() >
          kGradientRelTolerance * scale) {
        throw InvariantViolation("analytic gradient of '" + field.name() +
                                 "' disagrees with finite differences");
      }
    }
  }
  fields_.push_back(std::move(field));
  return fields_.back();
}

double lie_poisson_bracket(const AlgebraElement& grad_f,
                           const AlgebraElement& grad_g, const DualElement& x) {
  return -pairing(x, bracket(grad_f, grad_g));
}

double lie_poisson_bracket(const ScalarField& f, const ScalarField& g,
                           const DualElement& x) {
  return lie_poisson_bracket(f.gradient(x), g.gradient(x), x);
}

double canonical_bracket(Coord a, Coord b, const DualElement& x) {
  if (is_mu(a)) {
    return canonical_mu_bracket(sub(a), b, x);
  }
  if (is_mu(b)) {
    return -canonical_mu_bracket(sub(b), a, x);
  }
  return 0.0;
}

std::vector<BracketReport> base_bracket_table(const DualElement& x) {
  std::vector<std::pair<Coord, Coord>> pairs;
  for (int a = 3; a < 7; ++a) {
    for (int b = 3; b < 7; ++b) {
      pairs.emplace_back(Coord(a), Coord(b));
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int a = 3; a < 7; ++a) {
      pairs.emplace_back(Coord(i), Coord(a));
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      pairs.emplace_back(Coord(i), Coord(j));
    }
  }
  std::vector<BracketReport> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    BracketReport r;
    r.lhs = coord_name(a);
    r.rhs = coord_name(b);
    r.value = lie_poisson_bracket(AlgebraElement::basis(static_cast<int>(a)),
                                  AlgebraElement::basis(static_cast<int>(b)), x);
    r.expected = canonical_bracket(a, b, x);
    r.residual = std::abs(r.value - r.expected);
    out.push_back(std::move(r));
  }
  return out;
}

AlgebraElement bracket_gradient(const ScalarField& g, const ScalarField& h,
                                const DualElement& x) {
  if (!g.has_analytic_gradient() || !h.has_analytic_gradient()) {
    throw UnsupportedField("nested brackets need analytic gradients");
  }
  const AlgebraElement dg = g.gradient(x);
  const AlgebraElement dh = h.gradient(x);
  const Matrix7 hg = g.hessian(x);
  const Matrix7 hh = h.hessian(x);
  // K(x) = -<x, [dg(x), dh(x)]>
  Vector7 out = -to_vector(bracket(dg, dh));
  for (int m = 0; m < kAlgebraDim; ++m) {
    const AlgebraElement dg_m = algebra_from_vector(hg.col(m));
    const AlgebraElement dh_m = algebra_from_vector(hh.col(m));
    out(m) -= pairing(x, bracket(dg_m, dh) + bracket(dg, dh_m));
  }
  return algebra_from_vector(out);
}

double jacobi_residual(const ScalarField& f, const ScalarField& g,
                       const ScalarField& h, const DualElement& x) {
  for (const ScalarField* field : {&f, &g, &h}) {
    if (!field->has_analytic_gradient() || !field->has_hessian()) {
      throw UnsupportedField("jacobi_residual needs analytic derivatives of '" +
                             field->name() + "'");
    }
  }
  const double sum =
      lie_poisson_bracket(f.gradient(x), bracket_gradient(g, h, x), x) +
      lie_poisson_bracket(g.gradient(x), bracket_gradient(h, f, x), x) +
      lie_poisson_bracket(h.gradient(x), bracket_gradient(f, g, x), x);
  return std::abs(sum);
}

std::vector<BracketReport> quaternionic_bracket_forms(const DualElement& x,
                                                      const PureQuaternion& xi,
                                                      const Quaternion& a,
                                                      const Quaternion& b) {
  std::vector<BracketReport> out;
  const AlgebraElement grad_moment{{}, xi};  // grad <mu, xi>
  auto add = [&](std::string lhs, std::string rhs, double value, double expected) {
    out.push_back({std::move(lhs), std::move(rhs), value, expected,
                   std::abs(value - expected)});
  };

  const auto torque = (2.0 * cross(x.mu, xi)).to_array();
  for (int i = 0; i < 3; ++i) {
    add(coord_name(Coord(i)), "<mu,xi>",
        lie_poisson_bracket(AlgebraElement::basis(i), grad_moment, x), torque[i]);
  }
  const auto transported = (x.pi * xi).to_array();
  for (int k = 0; k < 4; ++k) {
    add(coord_name(Coord(3 + k)), "<mu,xi>",
        lie_poisson_bracket(AlgebraElement::basis(3 + k), grad_moment, x),
        transported[k]);
  }
  add("<pi,a>", "<pi,b>",
      lie_poisson_bracket(AlgebraElement{a, {}}, AlgebraElement{b, {}}, x), 0.0);
  return out;
}

}  // namespace qorbit

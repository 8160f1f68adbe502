#include "qorbit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qorbit/errors.hpp"
#include "qorbit/poisson.hpp"

namespace qorbit {

namespace {

bool finite(const Quaternion& q, const PureQuaternion& mu) {
  return q.is_finite() && mu.is_finite();
}

// Generic classical RK4 over the 7 components (q or pi, mu).
template <typename Point, typename Field>
Point rk4(const Point& p, double dt, Field&& field) {
  const Point k1 = field(p);
  const Point k2 = field(p + (0.5 * dt) * k1);
  const Point k3 = field(p + (0.5 * dt) * k2);
  const Point k4 = field(p + dt * k3);
  return p + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

State operator+(const State& a, const State& b) { return {a.q + b.q, a.mu + b.mu}; }
State operator*(double k, const State& a) { return {k * a.q, k * a.mu}; }

Sample make_sample(double t, const Quaternion& q, const PureQuaternion& mu,
                   const InertiaSpec& inertia) {
  Sample s;
  s.t = t;
  s.q = q;
  s.mu = mu;
  s.energy = hamiltonian(State{q, mu}, inertia);
  s.qnorm = norm(q);
  s.munorm = norm(mu);
  s.casimir = inner(q, q);
  return s;
}

}  // namespace

InertiaSpec::InertiaSpec(double i1, double i2, double i3) : moments_{i1, i2, i3} {
  for (double m : moments_) {
    if (!(m > 0.0) || !std::isfinite(m)) {
      throw ConfigError("moments of inertia must be finite and strictly positive");
    }
  }
}

PureQuaternion InertiaSpec::angular_gradient(const PureQuaternion& mu) const {
  return {mu.x / moments_[0], mu.y / moments_[1], mu.z / moments_[2]};
}

const char* to_string(Integrator m) {
  return m == Integrator::RK4Projected ? "rk4_projected" : "rk4_raw";
}

const char* to_string(Formulation f) {
  switch (f) {
    case Formulation::Canonical:
      return "canonical";
    case Formulation::LiePoisson:
      return "lie_poisson";
    case Formulation::Both:
      return "both";
  }
  return "unknown";
}

void RunConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ConfigError("dt must be positive");
  }
  if (!std::isfinite(t_end) || !(t_end >= dt)) {
    throw ConfigError("t_end must be at least dt");
  }
  if (cadence == 0) {
    throw ConfigError("cadence must be a positive integer");
  }
  if (!finite(initial.q, initial.mu)) {
    throw ConfigError("initial state must be finite");
  }
  if (std::abs(norm(initial.q) - 1.0) > UnitQuaternion::kTolerance) {
    throw ConfigError("initial orientation must be a unit quaternion");
  }
}

double hamiltonian(const State& s, const InertiaSpec& inertia) {
  const PureQuaternion& m = s.mu;
  return 0.5 * (m.x * m.x / inertia.i1() + m.y * m.y / inertia.i2() +
                m.z * m.z / inertia.i3());
}

double hamiltonian(const DualElement& x, const InertiaSpec& inertia) {
  return hamiltonian(State{x.pi, x.mu}, inertia);
}

State canonical_vector_field(const State& s, const InertiaSpec& inertia) {
  const PureQuaternion xi = inertia.angular_gradient(s.mu);
  return {s.q * xi, 2.0 * cross(s.mu, xi)};
}

DualTangent lie_poisson_vector_field(const DualElement& x,
                                     const InertiaSpec& inertia) {
  const AlgebraElement grad_h{{}, inertia.angular_gradient(x.mu)};
  std::array<double, 7> rate{};
  for (int k = 0; k < kAlgebraDim; ++k) {
    rate[k] = lie_poisson_bracket(AlgebraElement::basis(k), grad_h, x);
  }
  return {{rate[3], rate[4], rate[5], rate[6]}, {rate[0], rate[1], rate[2]}};
}

DualTangent lie_poisson_vector_field_closed(const DualElement& x,
                                            const InertiaSpec& inertia) {
  const PureQuaternion xi = inertia.angular_gradient(x.mu);
  return {x.pi * xi, 2.0 * cross(x.mu, xi)};
}

State step(const State& s, const InertiaSpec& inertia, double dt,
           Integrator method, double q_norm) {
  State next = rk4(s, dt, [&](const State& p) {
    return canonical_vector_field(p, inertia);
  });
  if (method == Integrator::RK4Projected) {
    next.q = (q_norm / norm(next.q)) * next.q;
  }
  return next;
}

DualElement step(const DualElement& x, const InertiaSpec& inertia, double dt,
                 Integrator method, double pi_norm) {
  DualElement next = rk4(x, dt, [&](const DualElement& p) {
    const DualTangent t = lie_poisson_vector_field(p, inertia);
    return DualElement{t.dpi, t.dmu};
  });
  if (method == Integrator::RK4Projected) {
    next.pi = (pi_norm / norm(next.pi)) * next.pi;
  }
  return next;
}

DriftSummary drifts(const Trajectory& traj) {
  DriftSummary d;
  if (traj.samples.empty()) {
    return d;
  }
  const Sample& first = traj.samples.front();
  for (const Sample& s : traj.samples) {
    const double de = std::abs(s.energy - first.energy);
    d.energy_relative = std::max(
        d.energy_relative, first.energy > 0.0 ? de / first.energy : de);
    d.munorm = std::max(d.munorm, std::abs(s.munorm - first.munorm));
    d.qnorm = std::max(d.qnorm, std::abs(s.qnorm - first.qnorm));
    d.casimir = std::max(d.casimir, std::abs(s.casimir - first.casimir));
  }
  return d;
}

Trajectory integrate(const RunConfig& cfg) {
  return integrate(cfg, cfg.formulation == Formulation::Both
                            ? Formulation::Canonical
                            : cfg.formulation);
}

Trajectory integrate(const RunConfig& cfg, Formulation which) {
  cfg.validate();
  if (which == Formulation::Both) {
    throw ConfigError("integrate needs a single formulation");
  }
  // The last step is shortened so the run ends exactly at t_end.
  const auto steps =
      static_cast<std::size_t>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
  Trajectory traj;
  traj.formulation = which;
  traj.steps = steps;

  Quaternion q = cfg.initial.q;
  PureQuaternion mu = cfg.initial.mu;
  const double initial_norm = norm(q);
  traj.samples.push_back(make_sample(0.0, q, mu, cfg.inertia));

  double t = 0.0;
  for (std::size_t n = 1; n <= steps; ++n) {
    const double h = (n == steps) ? cfg.t_end - t : cfg.dt;
    if (which == Formulation::Canonical) {
      const State next = step(State{q, mu}, cfg.inertia, h, cfg.integrator,
                              initial_norm);
      q = next.q;
      mu = next.mu;
    } else {
      const DualElement next = step(DualElement{q, mu}, cfg.inertia, h,
                                    cfg.integrator, initial_norm);
      q = next.pi;
      mu = next.mu;
    }
    t = (n == steps) ? cfg.t_end : static_cast<double>(n) * cfg.dt;
    if (!finite(q, mu)) {
      std::ostringstream msg;
      msg << "non-finite state at step " << n << " (t = " << t << ")";
      throw IntegrationError(msg.str(), n);
    }
    if (n % cfg.cadence == 0 || n == steps) {
      traj.samples.push_back(make_sample(t, q, mu, cfg.inertia));
    }
  }
  return traj;
}

DivergenceReport compare_formulations(const RunConfig& cfg) {
  DivergenceReport out;
  out.canonical = integrate(cfg, Formulation::Canonical);
  out.lie_poisson = integrate(cfg, Formulation::LiePoisson);
  const auto& a = out.canonical.samples;
  const auto& b = out.lie_poisson.samples;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const double d = norm(b[i].q - a[i].q) + norm(b[i].mu - a[i].mu);
    if (d > out.max_divergence) {
      out.max_divergence = d;
      out.time_of_max = a[i].t;
    }
  }
  return out;
}

}  // namespace qorbit

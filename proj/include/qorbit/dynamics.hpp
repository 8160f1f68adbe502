#pragma once

// Free rigid-body flows, H = (mu_1^2/I_1 + mu_2^2/I_2 + mu_3^2/I_3) / 2, run in
// the canonical (q, mu) variables and on g* with the Lie-Poisson bracket.
//
// Both flows take the bracket relations verbatim:
//   dq/dt = q xi_H,   dmu/dt = 2 mu x xi_H,   xi_H = grad_mu H.
// The classical body angular velocity is Omega = 2 xi_H, which recovers the
// familiar dq/dt = q Omega / 2; the factor is documented, not rescaled.

#include <array>
#include <cstddef>
#include <vector>

#include "qorbit/coadjoint.hpp"

namespace qorbit {

/// Principal moments of inertia. All must be strictly positive; the triangle
/// inequalities of physical bodies are not enforced.
class InertiaSpec {
 public:
  InertiaSpec(double i1, double i2, double i3);

  double i1() const { return moments_[0]; }
  double i2() const { return moments_[1]; }
  double i3() const { return moments_[2]; }

  /// grad_mu H = (mu_1/I_1, mu_2/I_2, mu_3/I_3).
  PureQuaternion angular_gradient(const PureQuaternion& mu) const;

 private:
  std::array<double, 3> moments_;
};

/// Canonical phase point. q is the orientation and stays on S3 up to the
/// projection tolerance when RK4Projected is used; mu is the body angular
/// momentum in left trivialization.
struct State {
  Quaternion q = Quaternion::identity();
  PureQuaternion mu;
};

enum class Integrator { RK4Projected, RK4Raw };
enum class Formulation { Canonical, LiePoisson, Both };

const char* to_string(Integrator m);
const char* to_string(Formulation f);

struct RunConfig {
  InertiaSpec inertia{1.0, 1.0, 1.0};
  State initial;
  double dt = 1e-3;
  double t_end = 1.0;
  Integrator integrator = Integrator::RK4Projected;
  Formulation formulation = Formulation::Canonical;
  /// Record a sample every `cadence` steps (the final state is always kept).
  std::size_t cadence = 1;

  /// Throws ConfigError on dt <= 0, t_end < dt, zero cadence, non-finite
  /// values or a non-unit initial orientation.
  void validate() const;
};

double hamiltonian(const State& s, const InertiaSpec& inertia);
double hamiltonian(const DualElement& x, const InertiaSpec& inertia);

State canonical_vector_field(const State& s, const InertiaSpec& inertia);

/// Evaluates {pi_a, H} and {mu_i, H} with the Lie-Poisson bracket.
DualTangent lie_poisson_vector_field(const DualElement& x,
                                     const InertiaSpec& inertia);

/// Closed form (pi xi_H, 2 mu x xi_H) of the same field.
DualTangent lie_poisson_vector_field_closed(const DualElement& x,
                                            const InertiaSpec& inertia);

/// One classical RK4 step; RK4Projected rescales q to `q_norm` afterwards.
State step(const State& s, const InertiaSpec& inertia, double dt,
           Integrator method, double q_norm = 1.0);
DualElement step(const DualElement& x, const InertiaSpec& inertia, double dt,
                 Integrator method, double pi_norm);

struct Sample {
  double t = 0.0;
  /// q for the canonical flow, pi for the Lie-Poisson flow.
  Quaternion q;
  PureQuaternion mu;
  double energy = 0.0;
  double qnorm = 0.0;
  double munorm = 0.0;
  /// |q|^2 (canonical) or |pi|^2 (Lie-Poisson).
  double casimir = 0.0;
};

struct Trajectory {
  Formulation formulation = Formulation::Canonical;
  std::vector<Sample> samples;
  std::size_t steps = 0;
};

struct DriftSummary {
  double energy_relative = 0.0;  // max |H(t) - H(0)| / H(0) (absolute if H(0) = 0)
  double munorm = 0.0;           // max | |mu(t)| - |mu(0)| |
  double qnorm = 0.0;            // max | |q(t)| - |q(0)| |
  double casimir = 0.0;          // max |C(t) - C(0)|
};

DriftSummary drifts(const Trajectory& traj);

/// Integrates one formulation. For cfg.formulation == Both the canonical run
/// is returned. Throws IntegrationError at the first non-finite step.
Trajectory integrate(const RunConfig& cfg);
Trajectory integrate(const RunConfig& cfg, Formulation which);

struct DivergenceReport {
  Trajectory canonical;
  Trajectory lie_poisson;
  /// max over samples of |pi(t) - q(t)| + |mu_LP(t) - mu_can(t)|.
  double max_divergence = 0.0;
  double time_of_max = 0.0;
};

/// Runs both flows from pi(0) = q(0) and the same mu(0).
DivergenceReport compare_formulations(const RunConfig& cfg);

}  // namespace qorbit

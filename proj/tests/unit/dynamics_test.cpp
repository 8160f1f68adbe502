#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qorbit/dynamics.hpp"
#include "qorbit/errors.hpp"
#include "qorbit/random.hpp"
#include "qorbit/run_config.hpp"

using namespace qorbit;

namespace {

RunConfig symmetric(double dt, double t_end) {
  RunConfig cfg;
  cfg.initial = {e0, {0, 0, 1}};
  cfg.dt = dt;
  cfg.t_end = t_end;
  return cfg;
}

}  // namespace

TEST(Hamiltonian, Examples) {
  const InertiaSpec sym(1, 1, 1), body(1, 2, 3);
  EXPECT_EQ(hamiltonian(State{e0, {}}, sym), 0.0);
  EXPECT_EQ(hamiltonian(State{e0, {0, 0, 1}}, sym), 0.5);
  EXPECT_EQ(hamiltonian(State{e0, {2, 1, 0}}, body), 2.25);
  EXPECT_THROW(InertiaSpec(1, 0, 1), ConfigError);
  EXPECT_THROW(InertiaSpec(1, NAN, 1), ConfigError);
}

TEST(VectorFields, Examples) {
  const InertiaSpec sym(1, 1, 1), body(1, 2, 3);
  State d = canonical_vector_field({e0, {}}, body);
  EXPECT_EQ(norm(d.q) + norm(d.mu), 0.0);
  d = canonical_vector_field({e0, {0, 0, 1}}, sym);
  EXPECT_QUAT_NEAR(d.q, e3, 0.0);
  EXPECT_QUAT_NEAR(d.mu, PureQuaternion{}, 0.0);
  d = canonical_vector_field({e0, {1, 1, 0}}, body);
  EXPECT_QUAT_NEAR(d.mu, (PureQuaternion{0, 0, -1}), 0.0);

  DualTangent t = lie_poisson_vector_field({e0, {}}, body);
  EXPECT_EQ(norm(t.dpi) + norm(t.dmu), 0.0);
  t = lie_poisson_vector_field({e0, {0, 0, 1}}, sym);
  EXPECT_QUAT_NEAR(t.dpi, e3, 0.0);
  EXPECT_QUAT_NEAR(t.dmu, PureQuaternion{}, 0.0);
}

TEST(VectorFields, BracketEvaluationMatchesClosedForm) {
  Rng rng(51);
  for (int n = 0; n < 100; ++n) {
    const DualElement x = random_dual(rng, -3, 3);
    const InertiaSpec inertia(rng.uniform(0.5, 3), rng.uniform(0.5, 3), rng.uniform(0.5, 3));
    const DualTangent a = lie_poisson_vector_field(x, inertia);
    const DualTangent b = lie_poisson_vector_field_closed(x, inertia);
    EXPECT_LE(norm(a.dpi - b.dpi) + norm(a.dmu - b.dmu), 1e-12);
    const State c = canonical_vector_field({x.pi, x.mu}, inertia);
    EXPECT_LE(norm(a.dpi - c.q) + norm(a.dmu - c.mu), 1e-12);
  }
}

TEST(Integrator, TinyStepIsConsistent) {
  const InertiaSpec body(1, 2, 3);
  const State s{UnitQuaternion::renormalize({1, 0.2, -0.3, 0.1}).value(), {0.3, -0.8, 0.5}};
  const State f = canonical_vector_field(s, body);
  const State next = step(s, body, 1e-8, Integrator::RK4Raw);
  const double change = norm(next.q - s.q) + norm(next.mu - s.mu);
  EXPECT_LE(change, 2e-8 * (norm(f.q) + norm(f.mu)));
}

TEST(Integrator, SymmetricBodyClosedForm) {
  const Trajectory traj = integrate(symmetric(1e-3, 1.0));
  const Sample& end = traj.samples.back();
  EXPECT_DOUBLE_EQ(end.t, 1.0);
  EXPECT_EQ(traj.steps, 1000u);
  EXPECT_QUAT_NEAR(end.q, (Quaternion{std::cos(1.0), 0, 0, std::sin(1.0)}), 1e-10);
}

TEST(Integrator, FourthOrderConvergence) {
  double prev = 0.0;
  for (double dt : {0.1, 0.05, 0.025}) {
    const Trajectory traj = integrate(symmetric(dt, 2.0));
    const double err =
        oracle::dist(traj.samples.back().q, Quaternion{std::cos(2.0), 0, 0, std::sin(2.0)});
    if (prev > 0.0) {
      EXPECT_GE(prev / err, 14.0);
      EXPECT_LE(prev / err, 18.0);
    }
    prev = err;
  }
}

TEST(Integrator, FreeBodyInvariants) {
  RunConfig cfg;
  cfg.inertia = InertiaSpec(1, 2, 3);
  cfg.initial = {UnitQuaternion::renormalize({0.5, 0.5, -0.5, 0.2}).value(), {0.6, 0.0, 0.8}};
  cfg.dt = 1e-3;
  cfg.t_end = 10.0;
  cfg.cadence = 100;
  const Trajectory traj = integrate(cfg);
  const DriftSummary d = drifts(traj);
  EXPECT_LE(d.energy_relative, 1e-8);
  EXPECT_LE(d.munorm, 1e-8);
  for (const Sample& s : traj.samples) EXPECT_NEAR(s.qnorm, 1.0, 1e-12);
  EXPECT_EQ(traj.samples.size(), 101u);
}

TEST(Integrator, RawStepDriftsButStaysClose) {
  RunConfig cfg;
  cfg.inertia = InertiaSpec(1, 2, 3);
  cfg.initial = {e0, {0.6, 0.0, 0.8}};
  cfg.t_end = 10.0;
  cfg.integrator = Integrator::RK4Raw;
  const DriftSummary d = drifts(integrate(cfg));
  EXPECT_LE(d.qnorm, 1e-6);
}

TEST(Integrator, ShortenedFinalStep) {
  const Trajectory traj = integrate(symmetric(0.3, 1.0));
  EXPECT_EQ(traj.steps, 4u);
  EXPECT_DOUBLE_EQ(traj.samples.back().t, 1.0);
  EXPECT_QUAT_NEAR(traj.samples.back().q, (Quaternion{std::cos(1.0), 0, 0, std::sin(1.0)}), 1e-3);
}

TEST(Formulations, Agree) {
  RunConfig cfg = symmetric(1e-3, 10.0);
  EXPECT_LE(compare_formulations(cfg).max_divergence, 1e-10);
  cfg.inertia = InertiaSpec(1, 2, 3);
  cfg.initial.mu = {0.3, -0.5, 0.8};
  cfg.cadence = 50;
  const DivergenceReport r = compare_formulations(cfg);
  EXPECT_LE(r.max_divergence, 1e-8);
  const DriftSummary lp = drifts(r.lie_poisson);
  EXPECT_LE(lp.qnorm, 1e-12);
  cfg.initial.mu = {};
  EXPECT_EQ(compare_formulations(cfg).max_divergence, 0.0);
}

TEST(RunConfigTest, Validation) {
  RunConfig cfg = symmetric(1e-3, 1.0);
  EXPECT_NO_THROW(cfg.validate());
  cfg.t_end = 0.0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = symmetric(0.0, 1.0);
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = symmetric(1e-3, 1.0);
  cfg.initial.q = 2.0 * e0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = symmetric(1e-3, 1.0);
  cfg.cadence = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = symmetric(1e-3, 1.0);
  EXPECT_THROW(integrate(cfg, Formulation::Both), ConfigError);
}

TEST(RunConfigTest, DivergingRunReportsStep) {
  RunConfig cfg = symmetric(1e-3, 1.0);
  cfg.initial.mu = {1e300, 1e300, 1e300};
  cfg.inertia = InertiaSpec(1, 2, 3);
  try {
    integrate(cfg);
    FAIL() << "expected IntegrationError";
  } catch (const IntegrationError& e) {
    EXPECT_GE(e.step(), 1u);
  }
}

TEST(RunConfigFile, ParsesAllKeys) {
  std::istringstream in(
      "# body\n"
      "inertia = 1 2 3\n"
      "q0 = 1 0 0 0\n"
      "mu0 = 0.1 0.2 0.3   # trailing comment\n"
      "\n"
      "dt = 0.01\n"
      "t_end = 2\n"
      "integrator = rk4_raw\n"
      "formulation = both\n"
      "cadence = 5\n");
  const RunConfig cfg = parse_run_config(in);
  EXPECT_EQ(cfg.inertia.i2(), 2.0);
  EXPECT_EQ(cfg.initial.mu.z, 0.3);
  EXPECT_EQ(cfg.dt, 0.01);
  EXPECT_EQ(cfg.t_end, 2.0);
  EXPECT_EQ(cfg.integrator, Integrator::RK4Raw);
  EXPECT_EQ(cfg.formulation, Formulation::Both);
  EXPECT_EQ(cfg.cadence, 5u);
}

TEST(RunConfigFile, Rejections) {
  const std::string base = "inertia = 1 1 1\nq0 = 1 0 0 0\nmu0 = 0 0 1\ndt = 0.1\n";
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_run_config(in);
  };
  EXPECT_NO_THROW(parse(base + "t_end = 1\n"));
  EXPECT_THROW(parse(base), ConfigError);                           // missing t_end
  EXPECT_THROW(parse(base + "t_end = 0\n"), ConfigError);           // t_end < dt
  EXPECT_THROW(parse(base + "t_end = 1\nspeed = 3\n"), ConfigError);  // unknown key
  EXPECT_THROW(parse(base + "t_end = 1\nt_end = 2\n"), ConfigError);  // duplicate
  EXPECT_THROW(parse(base + "t_end = 1x\n"), ConfigError);
  EXPECT_THROW(parse(base + "t_end = nan\n"), ConfigError);
  EXPECT_THROW(parse(base + "t_end = 1\nintegrator = euler\n"), ConfigError);
  EXPECT_THROW(parse("inertia = 1 1\n"), ConfigError);
  EXPECT_THROW(parse("no equals sign\n"), ConfigError);
  EXPECT_THROW(load_run_config("/nonexistent/run.cfg"), ConfigError);
}

TEST(RunConfigFile, ErrorsCarryLineNumbers) {
  std::istringstream in("inertia = 1 1 1\nbogus = 2\n");
  try {
    parse_run_config(in);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

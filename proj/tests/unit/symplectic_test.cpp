#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qorbit/errors.hpp"
#include "qorbit/random.hpp"
#include "qorbit/symplectic.hpp"

using namespace qorbit;

namespace {
const PureQuaternion eps1{1, 0, 0}, eps2{0, 1, 0}, eps3{0, 0, 1};
}

TEST(Kks, Examples) {
  const DualElement x{{0.3, 1, -2, 0.5}, {0.1, 0.2, 0.3}};
  const AlgebraElement v{{1, 2, 3, 4}, {5, 6, 7}};
  EXPECT_EQ(kks_form(x, v, v), 0.0);
  EXPECT_EQ(kks_form({e0, {}}, {e1, {}}, {{}, eps1}), 1.0);
  EXPECT_EQ(kks_form({{}, eps3}, {{}, eps1}, {{}, eps2}), -2.0);
}

TEST(Kks, KernelDirection) {
  Rng rng(31);
  for (int n = 0; n < 50; ++n) {
    const DualElement x = random_type2(rng);
    EXPECT_NEAR(kks_form(x, {x.pi, {}}, random_algebra(rng)), 0.0, 1e-12);
  }
}

TEST(Theta, Examples) {
  const DualElement x{e0, eps3};
  EXPECT_EQ(theta(x, {e2, {}}), 0.0);
  EXPECT_EQ(theta(x, {{}, eps3}), -1.0);
  EXPECT_EQ(theta(x, {{}, eps1}), 0.0);
  EXPECT_THROW(theta({{}, eps3}, {{}, eps1}), DomainError);
}

TEST(Theta, ExactnessExamples) {
  const AlgebraElement v{{0.2, 0.1, 0.4, -0.3}, {0.5, 0.1, -0.2}};
  const DualElement x{{1, 0.5, -0.2, 0.3}, {0.4, -0.1, 0.7}};
  EXPECT_NEAR(d_theta_numeric(x, v, v, {}), 0.0, 1e-12);
  EXPECT_NEAR(d_theta_numeric({e0, {}}, {e1, {}}, {{}, eps1}, {}), -1.0, 1e-6);
}

TEST(Theta, ExactnessRandom) {
  Rng rng(32);
  for (int n = 0; n < 200; ++n) {
    const DualElement x = random_type2(rng);
    const AlgebraElement v = random_algebra(rng), w = random_algebra(rng);
    EXPECT_NEAR(kks_form(x, v, w) + d_theta_numeric(x, v, w, {}), 0.0, 1e-6);
  }
}

TEST(Theta, RichardsonTightensExactness) {
  Rng rng(33);
  const FdOptions rich{1e-3, true};
  for (int n = 0; n < 50; ++n) {
    const DualElement x = random_type2(rng, 0.5, 2.0);
    const AlgebraElement v = random_algebra(rng), w = random_algebra(rng);
    EXPECT_NEAR(kks_form(x, v, w) + d_theta_numeric(x, v, w, rich), 0.0, 1e-8);
  }
}

TEST(Theta, PlusSignVariantIsNotExact) {
  // The alternative bracket nu xi' + nu' xi does not give omega = -d theta.
  const DualElement x{e0, eps3};
  const AlgebraElement v{e1, eps2}, w{e2, eps3};
  const double omega_plus =
      -inner(x.pi, v.nu * w.xi + w.nu * v.xi) - inner(x.mu, 2.0 * cross(v.xi, w.xi));
  EXPECT_NEAR(kks_form(x, v, w) + d_theta_numeric(x, v, w, {}), 0.0, 1e-6);
  EXPECT_GT(std::abs(omega_plus + d_theta_numeric(x, v, w, {})), 1.0);
}

TEST(Theta, StepValidation) {
  const DualElement x{e0, eps3};
  const AlgebraElement v{{}, eps1}, w{{}, eps2};
  EXPECT_THROW(d_theta_numeric(x, v, w, {0.0, false}), DomainError);
  EXPECT_THROW(d_theta_numeric(x, v, w, {2e-3, false}), DomainError);
  EXPECT_THROW(d_theta_numeric({{}, eps3}, v, w, {}), DomainError);
}

TEST(Theta, InvariantAlongStabilizer) {
  const DualElement x{{0.5, 1, -0.3, 2}, {0.2, 0.7, -1.1}};
  const AlgebraElement v{{0.1, 0.2, 0.3, 0.4}, {0.9, -0.4, 0.2}};
  EXPECT_EQ(theta(x, v + AlgebraElement{0.3 * x.pi, {}}), theta(x, v));
}

TEST(Closedness, RandomTriples) {
  Rng rng(34);
  for (int n = 0; n < 100; ++n) {
    const DualElement x = random_type2(rng);
    EXPECT_NEAR(d_omega_numeric(x, random_algebra(rng), random_algebra(rng), random_algebra(rng)),
                0.0, 1e-5);
  }
}

TEST(Nondegeneracy, BundleAndSphereOrbits) {
  const OrbitTangentAnalysis a = analyze_orbit_tangent({e0, {}});
  EXPECT_EQ(a.orbit_dimension, 6);
  EXPECT_GT(a.gram_sigma_min, 1e-8);
  const OrbitTangentAnalysis b = analyze_orbit_tangent({{}, eps3});
  EXPECT_EQ(b.orbit_dimension, 2);
  Rng rng(35);
  for (int n = 0; n < 20; ++n) {
    const OrbitTangentAnalysis r = analyze_orbit_tangent(random_type2(rng));
    EXPECT_EQ(r.orbit_dimension, 6);
    EXPECT_GT(r.gram_sigma_min, 1e-8);
  }
}

TEST(Phi, Examples) {
  CotangentPoint c = phi({3.0 * e0, {}});
  EXPECT_QUAT_NEAR(c.base(), 3.0 * e0, 0.0);
  EXPECT_QUAT_NEAR(c.covec(), Quaternion{}, 0.0);
  c = phi({e0, eps3});
  EXPECT_QUAT_NEAR(c.base(), e0, 0.0);
  EXPECT_QUAT_NEAR(c.covec(), -e3, 0.0);
  c = phi({2.0 * e3, eps1});
  EXPECT_QUAT_NEAR(c.base(), 2.0 * e3, 0.0);
  EXPECT_QUAT_NEAR(c.covec(), -0.5 * e2, 1e-16);
  EXPECT_EQ(c.radius(), 2.0);
  EXPECT_THROW(phi({{}, eps1}), DomainError);
}

TEST(Phi, CovectorIsTangent) {
  Rng rng(36);
  for (int n = 0; n < 100; ++n) {
    const CotangentPoint c = phi(random_type2(rng));
    EXPECT_NEAR(inner(c.covec(), c.base()), 0.0, 1e-12);
  }
}

TEST(CotangentPointTest, Validation) {
  EXPECT_THROW(CotangentPoint(e0, e1, 2.0), DomainError);
  EXPECT_THROW(CotangentPoint(Quaternion{}, e1, 0.0), DomainError);
  const CotangentPoint c(2.0 * e0, e0 + e1, 2.0);
  EXPECT_QUAT_NEAR(c.covec(), e1, 0.0);
  EXPECT_EQ(c.pair(e1), 1.0);
}

TEST(Liouville, SignCalibration) {
  EXPECT_EQ(liouville_sign(), -1);
  Rng rng(37);
  for (int n = 0; n < 20; ++n) {
    const DualElement x = random_type2(rng, 0.5, 2.0);
    AlgebraElement v = random_algebra(rng);
    if (std::abs(theta(x, v)) < 0.1) continue;
    EXPECT_EQ(calibrate_liouville_sign(x, v), -1);
  }
}

TEST(Liouville, ReferenceAndRandomResiduals) {
  EXPECT_EQ(liouville_pullback_residual({e0, eps3}, {}, {}), 0.0);
  EXPECT_LE(liouville_pullback_residual({e0, eps3}, {{}, eps3}, {}), 1e-6);
  EXPECT_NEAR(liouville_form_on_pushforward({e0, eps3}, {{}, eps3}), 1.0, 1e-6);
  Rng rng(38);
  for (int n = 0; n < 100; ++n) {
    const DualElement x = random_type2(rng);
    EXPECT_LE(liouville_pullback_residual(x, random_algebra(rng), {}), 1e-6);
  }
}

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qorbit/lie_group.hpp"
#include "qorbit/random.hpp"

using namespace qorbit;

namespace {

const PureQuaternion eps1{1, 0, 0}, eps2{0, 1, 0}, eps3{0, 0, 1};

double group_dist(const GroupElement& a, const GroupElement& b) {
  return norm(a.q - b.q) + norm(a.s.value() - b.s.value());
}

}  // namespace

TEST(LieAlgebra, BracketExamples) {
  EXPECT_LE(oracle::dist(bracket({{}, eps1}, {{}, eps2}), AlgebraElement{{}, 2.0 * eps3}), 0.0);
  EXPECT_LE(oracle::dist(bracket({{}, eps1}, {e0, {}}), AlgebraElement{-e1, {}}), 0.0);
  EXPECT_LE(oracle::dist(bracket({e2, {}}, {e3, {}}), AlgebraElement{}), 0.0);
}

TEST(LieAlgebra, BasisLayout) {
  EXPECT_EQ(AlgebraElement::basis(0), (AlgebraElement{{}, eps1}));
  EXPECT_EQ(AlgebraElement::basis(2), (AlgebraElement{{}, eps3}));
  EXPECT_EQ(AlgebraElement::basis(3), (AlgebraElement{e0, {}}));
  EXPECT_EQ(AlgebraElement::basis(6), (AlgebraElement{e3, {}}));
  const AlgebraElement v{{1, 2, 3, 4}, {5, 6, 7}};
  EXPECT_EQ(algebra_from_vector(to_vector(v)), v);
}

TEST(LieAlgebra, StructureConstantEntries) {
  const StructureConstants& c = structure_constants();
  // [eps1, e2] = e3, [eps2, e2] = e0, [e0, e0] = 0.
  EXPECT_EQ(c(0, 5, 6), 1);
  EXPECT_EQ(c(1, 5, 3), 1);
  for (int k = 0; k < 7; ++k) EXPECT_EQ(c(3, 3, k), 0);
  // [eps1, eps2] = 2 eps3
  EXPECT_EQ(c(0, 1, 2), 2);
  EXPECT_EQ(c(1, 0, 2), -2);
}

TEST(LieAlgebra, StructureConstantsAgreeWithBracket) {
  const StructureConstants& c = structure_constants();
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      const Vector7 b = to_vector(bracket(AlgebraElement::basis(i), AlgebraElement::basis(j)));
      for (int k = 0; k < 7; ++k) EXPECT_EQ(b(k), c(i, j, k)) << i << j << k;
    }
}

TEST(LieAlgebra, NonzeroListingIsAntisymmetric) {
  const auto entries = structure_constants().nonzero();
  EXPECT_FALSE(entries.empty());
  for (const auto& e : entries) {
    EXPECT_EQ(structure_constants()(e.j, e.i, e.k), -e.c);
  }
}

TEST(LieAlgebra, AdIsBracket) {
  const AlgebraElement v{{0.1, 0.2, -0.3, 0.4}, {0.5, -0.6, 0.7}};
  const AlgebraElement w{{1.1, -0.2, 0.3, 0.9}, {-0.5, 0.6, 0.2}};
  EXPECT_LE(norm(ad(v, v)), 0.0);
  EXPECT_LE(norm(ad(v, w) + ad(w, v)), 1e-15);
  EXPECT_LE(oracle::dist(ad({{}, eps1}, {e0, {}}), AlgebraElement{-e1, {}}), 0.0);
}

TEST(LieAlgebra, AlgebraInner) {
  EXPECT_EQ(algebra_inner({e0, eps1}, {e0, eps1}), 2.0);
  EXPECT_EQ(algebra_inner({e0, {}}, {e1, {}}), 0.0);
  EXPECT_EQ(algebra_inner({{}, eps2}, {e2, {}}), 0.0);
}

TEST(LieGroup, Multiplication) {
  const GroupElement g{Quaternion{0.3, 1, -2, 0.5}, UnitQuaternion(e2)};
  EXPECT_LE(group_dist(group_mul(GroupElement::identity(), g), g), 0.0);
  // e1 e3 = -e2 cancels the translation.
  const GroupElement a{e1, UnitQuaternion(e0)}, b{e2, UnitQuaternion(e3)};
  EXPECT_LE(group_dist(group_mul(a, b), GroupElement{{}, UnitQuaternion(e3)}), 0.0);
  EXPECT_LE(group_dist(group_mul(g, group_inv(g)), GroupElement::identity()), 1e-15);
}

TEST(LieGroup, Inverse) {
  EXPECT_LE(group_dist(group_inv(GroupElement::identity()), GroupElement::identity()), 0.0);
  const GroupElement g{e1, UnitQuaternion(e3)};
  EXPECT_LE(group_dist(group_inv(g), GroupElement{-e2, UnitQuaternion(-e3)}), 0.0);
  Rng rng(3);
  const GroupElement h = random_group(rng);
  EXPECT_LE(group_dist(group_inv(group_inv(h)), h), 1e-15);
}

TEST(LieGroup, InnerAutomorphism) {
  Rng rng(5);
  const GroupElement g = random_group(rng);
  const GroupElement id = GroupElement::identity();
  EXPECT_LE(group_dist(inner_auto(g, id), id), 1e-15);
  EXPECT_LE(group_dist(inner_auto(id, g), g), 1e-15);
  const Quaternion p{0.2, -0.4, 1.0, 0.3};
  const GroupElement h{p, UnitQuaternion(e0)};
  EXPECT_LE(group_dist(inner_auto(g, h), GroupElement{p * conj(g.s.value()), UnitQuaternion(e0)}),
            1e-15);
  // Agrees with g h g^-1.
  const GroupElement k = random_group(rng);
  EXPECT_LE(group_dist(inner_auto(g, k), group_mul(group_mul(g, k), group_inv(g))), 1e-14);
}

TEST(LieGroup, AdjointExamples) {
  const AlgebraElement v{{0.1, 0.2, -0.3, 0.4}, {0.5, -0.6, 0.7}};
  EXPECT_LE(oracle::dist(Ad(GroupElement::identity(), v), v), 0.0);
  const UnitQuaternion s = UnitQuaternion::renormalize({1, 2, -1, 0.5});
  const PureQuaternion xi{0.3, 0.1, -0.8};
  EXPECT_LE(oracle::dist(Ad({{}, s}, {{}, xi}), AlgebraElement{{}, rotate(s, xi)}), 1e-15);
  EXPECT_LE(oracle::dist(Ad({e1, UnitQuaternion(e0)}, {{}, eps1}), AlgebraElement{-e0, eps1}),
            0.0);
}

TEST(LieGroup, ExponentialExamples) {
  EXPECT_LE(group_dist(exp_group({}), GroupElement::identity()), 0.0);
  EXPECT_LE(group_dist(exp_group({e1, {}}), GroupElement{e1, UnitQuaternion(e0)}), 0.0);
  // A rotation angle of pi/2 on eps3 reaches e3; pi/4 gives (e0 + e3)/sqrt2.
  const double h = std::numbers::pi / 2;
  EXPECT_LE(group_dist(exp_group({{}, h * eps3}), GroupElement{{}, UnitQuaternion(e3)}), 1e-15);
  const GroupElement quarter = exp_group({{}, (h / 2) * eps3});
  EXPECT_QUAT_NEAR(quarter.s.value(), (1.0 / std::numbers::sqrt2) * (e0 + e3), 1e-15);
}

TEST(LieGroup, ExponentialIsOneParameterSubgroup) {
  Rng rng(9);
  for (int n = 0; n < 50; ++n) {
    const AlgebraElement v = random_algebra(rng);
    const double a = rng.uniform(-1, 1), b = rng.uniform(-1, 1);
    EXPECT_LE(group_dist(group_mul(exp_group(a * v), exp_group(b * v)), exp_group((a + b) * v)),
              1e-14);
  }
}

TEST(LieGroup, ExponentialSeriesBranchIsContinuous) {
  const Quaternion nu{0.3, -0.2, 0.5, 1.0};
  const PureQuaternion dir{0.6, 0.0, 0.8};
  for (double t : {0.99e-4, 1.01e-4}) {
    const GroupElement g = exp_group({nu, t * dir});
    // d/dt of the translation at small t: nu (1 + xi / 2 + ...).
    const Quaternion approx = nu * (e0 + (0.5 * t) * embed(dir));
    EXPECT_QUAT_NEAR(g.q, approx, 1e-8);
  }
}

TEST(LieGroup, AdDerivativeMatchesBracket) {
  Rng rng(13);
  for (int n = 0; n < 50; ++n) {
    const AlgebraElement v = random_algebra(rng), w = random_algebra(rng);
    Vector7 fd;
    for (int k = 0; k < 7; ++k) {
      fd(k) = oracle::central_difference(
          [&](double t) { return to_vector(Ad(exp_group(t * v), w))(k); }, 1e-4);
    }
    EXPECT_LE((fd - to_vector(bracket(v, w))).norm(), 1e-6);
  }
}

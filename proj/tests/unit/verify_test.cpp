#include <set>

#include <gtest/gtest.h>

#include "qorbit/errors.hpp"
#include "qorbit/random.hpp"
#include "qorbit/serialize.hpp"
#include "qorbit/verify.hpp"

using namespace qorbit;

TEST(Rng, SplitStreamsAreReproducible) {
  Rng a(42), b(42);
  EXPECT_EQ(a.next(), b.next());
  const Rng s1 = Rng(42).split(stream_id("x")), s2 = Rng(42).split(stream_id("x"));
  Rng c = s1, d = s2;
  EXPECT_EQ(c.next(), d.next());
  Rng e = Rng(42).split(stream_id("y"));
  Rng f = Rng(42).split(stream_id("x"));
  EXPECT_NE(e.next(), f.next());
  Rng g(1);
  for (int n = 0; n < 1000; ++n) {
    const double u = g.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Rng, SamplersRespectRanges) {
  Rng rng(2);
  for (int n = 0; n < 500; ++n) {
    EXPECT_NEAR(norm(random_unit(rng).value()), 1.0, 1e-15);
    const DualElement x = random_type2(rng);
    EXPECT_GE(norm(x.pi), 0.1 - 1e-12);
    EXPECT_LE(norm(x.pi), 10.0 + 1e-12);
  }
}

TEST(Verify, CatalogNamesAreUnique) {
  std::set<std::string> names;
  for (const auto& [name, tol] : property_catalog()) {
    EXPECT_TRUE(names.insert(name).second) << name;
    EXPECT_GE(tol, 0.0);
  }
  EXPECT_EQ(names.size(), 46u);
}

TEST(Verify, SmallRunPassesAndCoversCatalog) {
  VerifyOptions opt;
  opt.trials = 20;
  const VerifyReport report = run_verification(opt);
  EXPECT_TRUE(report.all_pass()) << report.failures().size();
  ASSERT_EQ(report.properties.size(), property_catalog().size());
  for (std::size_t i = 0; i < report.properties.size(); ++i) {
    EXPECT_EQ(report.properties[i].name, property_catalog()[i].first);
  }
  EXPECT_EQ(report.liouville_sign, -1);
}

TEST(Verify, DeterministicAcrossThreadCounts) {
  VerifyOptions a;
  a.trials = 15;
  a.threads = 1;
  VerifyOptions b = a;
  b.threads = 4;
  EXPECT_EQ(verify_report_json(run_verification(a)).dump(),
            verify_report_json(run_verification(b)).dump());
}

TEST(Verify, ZeroToleranceFailsNamedProperties) {
  VerifyOptions opt;
  opt.trials = 5;
  opt.tolerance_overrides["coad.duality"] = 0.0;
  opt.tolerance_overrides["dyn.energy"] = 0.0;
  const VerifyReport report = run_verification(opt);
  EXPECT_FALSE(report.all_pass());
  const auto failures = report.failures();
  EXPECT_NE(std::find(failures.begin(), failures.end(), "dyn.energy"), failures.end());
}

TEST(Verify, ConfigurationErrors) {
  VerifyOptions opt;
  opt.trials = 0;
  EXPECT_THROW(run_verification(opt), ConfigError);
  opt.trials = 2;
  opt.tolerance_overrides["no.such.property"] = 1.0;
  EXPECT_THROW(run_verification(opt), ConfigError);
  opt.tolerance_overrides.clear();
  opt.tolerance_all = -1.0;
  EXPECT_THROW(run_verification(opt), ConfigError);
}

TEST(Serialize, OrbitReport) {
  const Json j = orbit_report({2.0 * e3, {1, 0, 0}});
  EXPECT_EQ(j["kind"], "Type2Bundle");
  EXPECT_EQ(j["radius"], 2.0);
  EXPECT_EQ(j["reducer"]["q0"], Json::parse("[0.0, 0.0, -0.5, 0.0]"));
  EXPECT_EQ(j["reducer"]["s0"], Json::parse("[0.0, 0.0, 0.0, 1.0]"));
  EXPECT_EQ(j["reduced"]["pi"], Json::parse("[2.0, 0.0, 0.0, 0.0]"));
  const Json s = orbit_report({{}, {0, 0, 3}});
  EXPECT_EQ(s["kind"], "Type1Sphere");
  EXPECT_TRUE(s["reducer"].is_null());
}

TEST(Serialize, StructureConstants) {
  const Json j = structure_constants_json();
  ASSERT_TRUE(j.is_array());
  for (const auto& e : j) EXPECT_NE(e["c"], 0);
}

TEST(Serialize, TrajectoryCsv) {
  Trajectory t;
  Sample s;
  s.t = 0.5;
  s.q = e0;
  s.mu = {-0.0, 1.0 / 3.0, 0};
  t.samples.push_back(s);
  std::ostringstream out;
  write_trajectory_csv(out, t);
  EXPECT_EQ(out.str(),
            "t,q0,q1,q2,q3,mu1,mu2,mu3,energy,qnorm,munorm,casimir\n"
            "0.5,1,0,0,0,0,0.33333333333333331,0,0,0,0,0\n");
}

TEST(Serialize, BracketCsvHeader) {
  std::ostringstream out;
  write_bracket_csv(out, base_bracket_table({e0, {}}));
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "lhs,rhs,value,expected,residual");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 38);
}

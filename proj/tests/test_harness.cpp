#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "hardyhilbert/harness.hpp"
#include "hardyhilbert/inequalities.hpp"

namespace {

TEST(CaseRng, StreamsDependOnlyOnTheTriple) {
  hh::CaseRng a(1, 2, 3), b(1, 2, 3), c(1, 2, 4), d(1, 3, 3);
  for (int i = 0; i < 10; ++i) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  EXPECT_NE(c.uniform(), d.uniform());
}

TEST(CaseRng, RangesAndDisk) {
  hh::CaseRng rng(5, 0, 0);
  std::set<std::size_t> seen;
  for (int i = 0; i < 400; ++i) {
    const std::size_t k = rng.integer(3, 7);
    EXPECT_GE(k, 3u);
    EXPECT_LE(k, 7u);
    seen.insert(k);
    EXPECT_LE(std::abs(rng.in_disk(0.5)), 0.5);
  }
  EXPECT_EQ(seen.size(), 5u);
}

TEST(Samplers, SequencesAreUsable) {
  for (std::size_t i = 0; i < 60; ++i) {
    hh::CaseRng rng(8, 0, i);
    const hh::XSequence c = hh::sample_xsequence(rng, 40);
    EXPECT_EQ(c.size(), 40u);
    EXPECT_GT(c[0], 0.0);
    EXPECT_TRUE(std::isfinite(hh::xnorm(c)));
  }
}

TEST(Samplers, FactorizablePolynomialsKeepAwayFromCircle) {
  for (std::size_t i = 0; i < 40; ++i) {
    hh::CaseRng rng(9, 0, i);
    const hh::AnalyticPoly f = hh::sample_polynomial(rng, 8, true);
    EXPECT_GE(hh::root_distance_to_circle(f), 0.05);
    EXPECT_GE(f.degree(), 1u);
    const hh::AnalyticPoly g = hh::sample_polynomial_from_roots(rng, 6);
    EXPECT_EQ(g.degree(), 6u);
    EXPECT_GE(hh::root_distance_to_circle(g), 0.05 - 1e-9);
    EXPECT_NEAR(g.coeffs().norm(), 1.0, 1e-12);
  }
  EXPECT_TRUE(std::isinf(hh::root_distance_to_circle(hh::AnalyticPoly{2.0})));
}

hh::SuiteConfig small_config() {
  hh::SuiteConfig cfg;
  cfg.counts = {{"carleson_boundedness", 1}, {"bridge_identity", 40}, {"hilbert_inequality", 10},
                {"slow_decay_infinitude", 1}, {"factorization_contract", 10}, {"hardy_degree_bound", 10}};
  return cfg;
}

TEST(Suite, DefaultSeedPasses) {
  const hh::SuiteReport rep = hh::run_suite(small_config());
  EXPECT_TRUE(rep.pass);
  ASSERT_EQ(rep.properties.size(), hh::suite_property_names().size());
  for (const hh::PropertyRecord& p : rep.properties) {
    EXPECT_EQ(p.failures, 0u) << p.name << ": " << (p.witnesses.empty() ? "" : p.witnesses.front().dump());
    EXPECT_GT(p.cases, 0u) << p.name;
  }
}

TEST(Suite, ReportIsDeterministicAcrossThreadCounts) {
  hh::SuiteConfig one = small_config();
  hh::SuiteConfig four = small_config();
  four.threads = 4;
  EXPECT_EQ(hh::to_json(hh::run_suite(one)).dump(), hh::to_json(hh::run_suite(four)).dump());
  EXPECT_EQ(hh::to_json(hh::run_suite(one)).dump(), hh::to_json(hh::run_suite(one)).dump());
}

TEST(Suite, BrokenHilbertFormIsCaught) {
  hh::SuiteHooks hooks;
  // drop the n = 0 row of the bilinear form
  hooks.hilbert_form = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b, const hh::XSequence& c) {
    Eigen::VectorXd tail = a;
    tail[0] = 0.0;
    return hh::hilbert_form(tail, b, c);
  };
  const hh::SuiteReport rep = hh::run_suite(small_config(), hooks);
  EXPECT_FALSE(rep.pass);
  bool found = false;
  for (const hh::PropertyRecord& p : rep.properties) {
    if (p.name != "bridge_identity") continue;
    found = true;
    EXPECT_GT(p.failures, 0u);
    ASSERT_FALSE(p.witnesses.empty());
    EXPECT_LE(p.witnesses.size(), 5u);
  }
  EXPECT_TRUE(found);
}

}  // namespace

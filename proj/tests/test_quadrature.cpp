#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hardyhilbert/quadrature.hpp"

namespace {

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  const hh::QuadratureRule rule = hh::gauss_legendre(10);
  EXPECT_NEAR(rule.weights.sum(), 2.0, 1e-14);
  // degree 19 is the highest exact degree for 10 points
  double s = 0.0;
  for (Eigen::Index k = 0; k < rule.nodes.size(); ++k) s += rule.weights[k] * std::pow(rule.nodes[k], 18);
  EXPECT_NEAR(s, 2.0 / 19.0, 1e-14);
}

TEST(GaussLegendre, MappedInterval) {
  const hh::QuadratureRule rule = hh::mapped(hh::gauss_legendre(8), 1.0, 3.0);
  double s = 0.0;
  for (Eigen::Index k = 0; k < rule.nodes.size(); ++k) s += rule.weights[k] * rule.nodes[k] * rule.nodes[k];
  EXPECT_NEAR(s, 26.0 / 3.0, 1e-13);
}

TEST(GradedRule, CoversIntervalAndClustersRight) {
  const hh::QuadratureRule rule = hh::graded_toward_right(0.25, 1.0, 128);
  EXPECT_EQ(rule.nodes.size(), 128);
  EXPECT_NEAR(rule.weights.sum(), 0.75, 1e-14);
  EXPECT_GT(rule.nodes.maxCoeff(), 1.0 - 1e-4);
  // (1 - r^2) r integrates exactly panel by panel
  double s = 0.0;
  for (Eigen::Index k = 0; k < rule.nodes.size(); ++k)
    s += rule.weights[k] * (1.0 - rule.nodes[k] * rule.nodes[k]) * rule.nodes[k];
  const auto anti = [](double r) { return r * r / 2 - r * r * r * r / 4; };
  EXPECT_NEAR(s, anti(1.0) - anti(0.25), 1e-15);
}

TEST(Adaptive, HandlesKinks) {
  const double v = hh::integrate_adaptive([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, 1e-15);
  EXPECT_NEAR(v, 0.5 * 0.09 + 0.5 * 0.49, 1e-14);
}

TEST(CircleGrid, EvaluateAndRecover) {
  Eigen::VectorXcd c(3);
  c << 1.0, std::complex<double>(0.0, 2.0), -0.5;
  const Eigen::VectorXcd vals = hh::evaluate_on_circle(c, 16);
  for (int j = 0; j < 16; ++j) {
    const auto z = std::polar(1.0, 2.0 * std::numbers::pi * j / 16.0);
    EXPECT_NEAR(std::abs(vals[j] - (c[0] + c[1] * z + c[2] * z * z)), 0.0, 1e-14);
  }
  const Eigen::VectorXcd back = hh::circle_coefficients(vals);
  EXPECT_NEAR(std::abs(back[1] - c[1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(back[5]), 0.0, 1e-15);
  EXPECT_THROW(hh::evaluate_on_circle(c, 2), std::exception);
}

}  // namespace

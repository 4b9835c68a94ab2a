#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hardyhilbert/errors.hpp"
#include "hardyhilbert/hardyspace.hpp"
#include "hardyhilbert/harness.hpp"

namespace {

using hh::AnalyticPoly;
using hh::Complex;
constexpr double kPi = std::numbers::pi;

TEST(AnalyticPoly, NormalizesDegree) {
  const AnalyticPoly f{1.0, 2.0, 0.0, 0.0};
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_TRUE((AnalyticPoly{0.0, 0.0}.is_zero()));
  EXPECT_EQ(AnalyticPoly::monomial(3).degree(), 3u);
  EXPECT_EQ(f(Complex{2.0}), Complex{5.0});
  EXPECT_EQ(f.derivative()[0], Complex{2.0});
}

TEST(HpNorm, Monomials) {
  for (std::size_t k : {0u, 1u, 5u, 17u}) {
    EXPECT_NEAR(hh::hp_norm(AnalyticPoly::monomial(k), 1), 1.0, 1e-14);
    EXPECT_NEAR(hh::hp_norm(AnalyticPoly::monomial(k), 2), 1.0, 1e-15);
  }
}

TEST(HpNorm, OnePlusZ) {
  const AnalyticPoly f{1.0, 1.0};
  EXPECT_NEAR(hh::hp_norm(f, 1, 4096), 4.0 / kPi, 1e-10);
  EXPECT_NEAR(hh::hp_norm(f, 2), std::sqrt(2.0), 1e-15);
}

TEST(HpNorm, RootOnCircleOffGrid) {
  // root at e^{i 0.3}: |f| = 2|sin((theta - 0.3)/2)|, mean 4/pi again
  const AnalyticPoly f{-std::polar(1.0, 0.3), 1.0};
  EXPECT_NEAR(hh::hp_norm(f, 1, 4096), 4.0 / kPi, 1e-10);
}

TEST(HpNorm, Errors) {
  const AnalyticPoly f{1.0, 1.0, 1.0};
  EXPECT_THROW(hh::hp_norm(f, 3, 4096), hh::ParameterError);
  EXPECT_THROW(hh::hp_norm(f, 1, 8), hh::ParameterError);
}

TEST(HpNorm, SquareOfOuterFactor) {
  // |(1 + z/2)^2| = |1 + z/2|^2 on the circle, so ||f||_1 = 1 + 1/4
  const AnalyticPoly g{1.0, 0.5};
  EXPECT_NEAR(hh::hp_norm(g * g, 1), 1.25, 1e-14);
}

TEST(HpNorm, QuadratureConvergesUnderRefinement) {
  hh::CaseRng rng(3, 0, 0);
  for (int t = 0; t < 20; ++t) {
    const AnalyticPoly f = hh::sample_polynomial(rng, 10, true);
    const std::size_t m = 8 * (f.degree() + 1);
    const double a = hh::hp_norm(f, 1, std::max<std::size_t>(m, 64));
    const double b = hh::hp_norm(f, 1, 2 * std::max<std::size_t>(m, 64));
    EXPECT_LE(std::abs(a - b), 1e-12 * b);
    EXPECT_LE(a, hh::hp_norm(f, 2) * (1 + 1e-14));
  }
}

TEST(CauchyProduct, Examples) {
  Eigen::VectorXd ones(2);
  ones << 1, 1;
  const Eigen::VectorXd sq = hh::cauchy_product(ones, ones);
  ASSERT_EQ(sq.size(), 3);
  EXPECT_EQ(sq[0], 1);
  EXPECT_EQ(sq[1], 2);
  EXPECT_EQ(sq[2], 1);

  Eigen::VectorXd e0(1);
  e0 << 1;
  Eigen::VectorXd b(3);
  b << 0.5, -2, 7;
  EXPECT_EQ(hh::cauchy_product(e0, b), b);

  Eigen::VectorXd x(2), y(2);
  x << 1, 2;
  y << 3, 4;
  const Eigen::VectorXd xy = hh::cauchy_product(x, y);
  EXPECT_EQ(xy, (Eigen::VectorXd(3) << 3, 10, 8).finished());

  Eigen::VectorXcd z(2);
  z << Complex(0, 1), 1;
  const Eigen::VectorXcd mixed = hh::cauchy_product(z, x);
  EXPECT_EQ(mixed[1], Complex(1, 2));
}

TEST(DualPairing, Examples) {
  const AnalyticPoly f{Complex(1, 2), Complex(-3, 0.5), 2.0};
  EXPECT_NEAR(std::abs(hh::dual_pairing(f, f) - Complex(std::pow(hh::hp_norm(f, 2), 2))), 0.0, 1e-14);
  EXPECT_EQ(hh::dual_pairing(AnalyticPoly::monomial(1), AnalyticPoly{1.0}), Complex{});
  // conjugate linear in the second slot
  EXPECT_EQ(hh::dual_pairing(AnalyticPoly{1.0}, AnalyticPoly{Complex(0, 1)}), Complex(0, -1));
}

TEST(DualPairing, PhaseAlignedPairingIsHardySum) {
  const AnalyticPoly f{Complex(1, 2), Complex(-3, 0.5), 0.0, Complex(0, -2)};
  const std::vector<double> c = {1.0, 0.5, 0.25, 0.125};
  const Eigen::VectorXcd alpha = hh::phase_sequence(f);
  Eigen::VectorXcd gc(4);
  double direct = 0.0;
  for (int n = 0; n < 4; ++n) {
    gc[n] = alpha[n] * c[n];
    direct += std::abs(f[n]) * c[n];
  }
  const Complex p = hh::dual_pairing(f, AnalyticPoly(gc));
  EXPECT_NEAR(p.real(), direct, 1e-14);
  EXPECT_NEAR(p.imag(), 0.0, 1e-14);
}

TEST(PhaseSequence, Examples) {
  const Eigen::VectorXcd a = hh::phase_sequence(AnalyticPoly{1.0, -1.0});
  EXPECT_EQ(a[0], Complex(1.0));
  EXPECT_EQ(a[1], Complex(-1.0));
  const Eigen::VectorXcd b = hh::phase_sequence(AnalyticPoly{2.0, 0.5, 3.0});
  for (Eigen::Index k = 0; k < 3; ++k) EXPECT_EQ(b[k], Complex(1.0));
  const Eigen::VectorXcd c = hh::phase_sequence(AnalyticPoly{0.0, Complex(0, 1)});
  EXPECT_EQ(c[0], Complex(1.0));
  EXPECT_EQ(c[1], Complex(0, 1));
}

TEST(Roots, CompanionRoots) {
  // (z - 0.5)(z - 3i)(z + 2)
  const AnalyticPoly f = AnalyticPoly{-0.5, 1.0} * AnalyticPoly{Complex(0, -3), 1.0} * AnalyticPoly{2.0, 1.0};
  std::vector<Complex> roots = hh::polynomial_roots(f);
  ASSERT_EQ(roots.size(), 3u);
  for (const Complex& want : {Complex(0.5), Complex(0, 3), Complex(-2)}) {
    double best = 1e9;
    for (const Complex& z : roots) best = std::min(best, std::abs(z - want));
    EXPECT_LT(best, 1e-13);
  }
  EXPECT_EQ(hh::polynomial_roots(AnalyticPoly::monomial(2)).size(), 2u);
}

TEST(Riesz, Monomial) {
  const hh::RieszFactors rf = hh::riesz_factorize(AnalyticPoly::monomial(2));
  EXPECT_EQ(rf.blaschke_degree, 2u);
  // h is outer with h(0) > 0, the inner factor z^2 sits in g
  EXPECT_EQ(rf.h.degree(), 0u);
  EXPECT_NEAR(std::abs(rf.h[0] - Complex(1.0)), 0.0, 1e-14);
  EXPECT_NEAR(rf.g.coeffs().norm() * rf.h.coeffs().norm(), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(rf.g[2] * rf.h[0] - Complex(1.0)), 0.0, 1e-14);
}

TEST(Riesz, OuterSquare) {
  const AnalyticPoly root{1.0, 0.5};
  const hh::RieszFactors rf = hh::riesz_factorize(root * root);
  EXPECT_EQ(rf.blaschke_degree, 0u);
  EXPECT_NEAR(rf.g.coeffs().norm(), std::sqrt(1.25), 1e-13);
  EXPECT_NEAR(rf.h.coeffs().norm(), std::sqrt(1.25), 1e-13);
  EXPECT_NEAR(std::abs(rf.h[0] - Complex(1.0)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(rf.h[1] - Complex(0.5)), 0.0, 1e-13);
  EXPECT_NEAR(hh::hp_norm(root * root, 1), 1.25, 1e-14);
}

TEST(Riesz, Constants) {
  const hh::RieszFactors pos = hh::riesz_factorize(AnalyticPoly{4.0});
  EXPECT_NEAR(std::abs(pos.g[0] - Complex(2.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(pos.h[0] - Complex(2.0)), 0.0, 1e-14);

  const Complex c(-3.0, 4.0);
  const hh::RieszFactors cx = hh::riesz_factorize(AnalyticPoly{c});
  EXPECT_NEAR(std::abs(cx.h[0] - Complex(std::sqrt(5.0))), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(cx.g[0] * cx.h[0] - c), 0.0, 1e-13);
}

TEST(Riesz, MixedRootsContract) {
  // roots 0.5 (inside) and 3 (outside)
  const AnalyticPoly f = AnalyticPoly{-0.5, 1.0} * AnalyticPoly{-3.0, 1.0};
  const hh::RieszFactors rf = hh::riesz_factorize(f);
  EXPECT_EQ(rf.blaschke_degree, 1u);
  EXPECT_LE(rf.residual_max, 1e-8 * hh::hp_norm(f, 2));
  const double f1 = hh::hp_norm(f, 1);
  EXPECT_LE(std::abs(f1 - rf.g.coeffs().norm() * rf.h.coeffs().norm()), 1e-8 * f1);
  EXPECT_LT(std::abs(rf.g(Complex(0.5))), 1e-12);
  EXPECT_GT(rf.h[0].real(), 0.0);
  EXPECT_NEAR(rf.h[0].imag(), 0.0, 1e-15);
  // |g| = |h| on the circle
  for (double t : {0.0, 1.0, 2.5, 4.0}) {
    const Complex z = std::polar(1.0, t);
    EXPECT_NEAR(std::abs(rf.g(z)), std::abs(rf.h(z)), 1e-12);
  }
}

TEST(Riesz, NearCircleRootsNeedLargerGrid) {
  const AnalyticPoly f = AnalyticPoly{-0.99, 1.0} * AnalyticPoly{Complex(0, 1.01), 1.0};
  const hh::RieszFactors rf = hh::riesz_factorize(f);
  EXPECT_GT(rf.grid_size, 4096u);
  EXPECT_LE(rf.residual_max, 1e-8 * hh::hp_norm(f, 2));
  EXPECT_LE(rf.norm_defect, 1e-8 * hh::hp_norm(f, 1));
}

TEST(Riesz, Errors) {
  EXPECT_THROW(hh::riesz_factorize(AnalyticPoly{}), hh::DomainError);
  try {
    (void)hh::riesz_factorize(AnalyticPoly{1.0, 1.0});
    FAIL() << "expected FactorizationSingular";
  } catch (const hh::FactorizationSingular& e) {
    EXPECT_NEAR(std::abs(e.root() - Complex(-1.0)), 0.0, 1e-12);
  }
}

TEST(Riesz, RandomContract) {
  for (std::size_t i = 0; i < 20; ++i) {
    hh::CaseRng rng(99, 1, i);
    const AnalyticPoly f = i % 2 ? hh::sample_polynomial(rng, 12, true) : hh::sample_polynomial_from_roots(rng, 24);
    const hh::RieszFactors rf = hh::riesz_factorize(f);
    EXPECT_LE(rf.residual_max, 1e-8 * hh::hp_norm(f, 2));
    const double f1 = hh::hp_norm(f, 1);
    EXPECT_LE(std::abs(f1 - rf.g.coeffs().norm() * rf.h.coeffs().norm()), 1e-8 * f1);
  }
}

}  // namespace

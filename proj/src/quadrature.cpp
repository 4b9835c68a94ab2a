#include "hardyhilbert/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/FFT>

#include "hardyhilbert/errors.hpp"

namespace hh {

QuadratureRule gauss_legendre(std::size_t n) {
  if (n == 0) throw ParameterError("gauss_legendre: n must be positive");
  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(ni, ni);
  for (Eigen::Index k = 1; k < ni; ++k) {
    const double kd = static_cast<double>(k);
    const double b = kd / std::sqrt(4.0 * kd * kd - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  QuadratureRule rule;
  rule.nodes = es.eigenvalues();
  rule.weights = 2.0 * es.eigenvectors().row(0).transpose().array().square();
  // symmetrize to remove the eigensolver's roundoff asymmetry
  for (Eigen::Index k = 0; k < ni / 2; ++k) {
    const Eigen::Index j = ni - 1 - k;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[k]);
    const double w = 0.5 * (rule.weights[j] + rule.weights[k]);
    rule.nodes[k] = -x;
    rule.nodes[j] = x;
    rule.weights[k] = w;
    rule.weights[j] = w;
  }
  if (n % 2 == 1) rule.nodes[ni / 2] = 0.0;
  return rule;
}

QuadratureRule mapped(const QuadratureRule& ref, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  return {(ref.nodes.array() * half + mid).matrix(), ref.weights * half};
}

QuadratureRule graded_toward_right(double a, double b, std::size_t points, std::size_t per_panel) {
  if (per_panel == 0 || points < per_panel)
    throw ParameterError("graded_toward_right: too few points");
  const std::size_t panels = points / per_panel;
  const QuadratureRule ref = gauss_legendre(per_panel);
  QuadratureRule out;
  out.nodes.resize(static_cast<Eigen::Index>(panels * per_panel));
  out.weights.resize(out.nodes.size());

  // panel p covers [b - L/2^p, b - L/2^{p+1}], the last one runs up to b
  const double len = b - a;
  Eigen::Index pos = 0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = b - len * std::ldexp(1.0, -static_cast<int>(p));
    const double hi = (p + 1 == panels) ? b : b - len * std::ldexp(1.0, -static_cast<int>(p + 1));
    const QuadratureRule piece = mapped(ref, lo, hi);
    out.nodes.segment(pos, piece.nodes.size()) = piece.nodes;
    out.weights.segment(pos, piece.weights.size()) = piece.weights;
    pos += piece.nodes.size();
  }
  return out;
}

namespace {

double apply_rule(const QuadratureRule& ref, const std::function<double(double)>& f, double a,
                  double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double s = 0.0;
  for (Eigen::Index k = 0; k < ref.nodes.size(); ++k) s += ref.weights[k] * f(mid + half * ref.nodes[k]);
  return s * half;
}

double adapt(const QuadratureRule& ref, const std::function<double(double)>& f, double a, double b,
             double whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = apply_rule(ref, f, a, mid);
  const double right = apply_rule(ref, f, mid, b);
  const double refined = left + right;
  const double floor = 8.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
  if (depth <= 0 || std::abs(refined - whole) <= std::max(tol, floor)) return refined;
  return adapt(ref, f, a, mid, left, 0.5 * tol, depth - 1) +
         adapt(ref, f, mid, b, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
  static const QuadratureRule ref = gauss_legendre(20);
  return adapt(ref, f, a, b, apply_rule(ref, f, a, b), abs_tol, max_depth);
}

Eigen::VectorXcd evaluate_on_circle(const Eigen::Ref<const Eigen::VectorXcd>& coeffs,
                                    std::size_t m, double radius) {
  if (static_cast<std::size_t>(coeffs.size()) > m)
    throw ParameterError("evaluate_on_circle: grid smaller than coefficient count");
  std::vector<std::complex<double>> spec(m, {0.0, 0.0});
  double scale = 1.0;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    spec[static_cast<std::size_t>(k)] = coeffs[k] * scale;
    scale *= radius;
  }
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  std::vector<std::complex<double>> vals;
  fft.inv(vals, spec);
  return Eigen::Map<Eigen::VectorXcd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

Eigen::VectorXcd circle_coefficients(const Eigen::Ref<const Eigen::VectorXcd>& values) {
  std::vector<std::complex<double>> in(values.data(), values.data() + values.size());
  std::vector<std::complex<double>> out;
  Eigen::FFT<double> fft;
  fft.fwd(out, in);
  Eigen::VectorXcd c = Eigen::Map<Eigen::VectorXcd>(out.data(), static_cast<Eigen::Index>(out.size()));
  return c / static_cast<double>(values.size());
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace hh

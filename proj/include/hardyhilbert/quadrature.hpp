#ifndef HARDYHILBERT_QUADRATURE_HPP
#define HARDYHILBERT_QUADRATURE_HPP

#include <complex>
#include <cstddef>
#include <functional>

#include <Eigen/Core>

namespace hh {

/// Nodes and weights of a quadrature rule on an interval.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Golub-Welsch).
QuadratureRule gauss_legendre(std::size_t n);

/// Maps a rule on [-1, 1] onto [a, b].
QuadratureRule mapped(const QuadratureRule& ref, double a, double b);

/// Composite Gauss-Legendre on [a, b] with panels shrinking geometrically
/// (ratio 1/2) toward b. `points` is rounded to a multiple of `per_panel`.
QuadratureRule graded_toward_right(double a, double b, std::size_t points,
                                   std::size_t per_panel = 16);

/// Adaptive Gauss-Legendre with bisection. Each panel compares the 20-point
/// rule against the sum over its two halves.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 48);

/// f(radius * e^{2 pi i j / M}) for j = 0..M-1 given Taylor coefficients.
/// Requires coeffs.size() <= M for exact evaluation.
Eigen::VectorXcd evaluate_on_circle(const Eigen::Ref<const Eigen::VectorXcd>& coeffs,
                                    std::size_t m, double radius = 1.0);

/// Fourier coefficients (1/M) sum_j v_j e^{-2 pi i jk / M}, k = 0..M-1.
/// Index k >= M/2 stands for the negative frequency k - M.
Eigen::VectorXcd circle_coefficients(const Eigen::Ref<const Eigen::VectorXcd>& values);

std::size_t next_pow2(std::size_t n);

}  // namespace hh

#endif  // HARDYHILBERT_QUADRATURE_HPP

#ifndef HARDYHILBERT_HARDYSPACE_HPP
#define HARDYHILBERT_HARDYSPACE_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace hh {

using Complex = std::complex<double>;

/// f(z) = sum_{n=0}^{d} a_n z^n with normalized degree: trailing zero
/// coefficients are dropped, except that the zero polynomial keeps a_0 = 0.
class AnalyticPoly {
public:
  AnalyticPoly() : coeffs_(Eigen::VectorXcd::Zero(1)) {}
  explicit AnalyticPoly(const Eigen::Ref<const Eigen::VectorXcd>& coeffs);
  explicit AnalyticPoly(const Eigen::Ref<const Eigen::VectorXd>& coeffs);
  AnalyticPoly(std::initializer_list<Complex> coeffs);

  static AnalyticPoly monomial(std::size_t k, Complex a = 1.0);

  std::size_t degree() const noexcept { return static_cast<std::size_t>(coeffs_.size() - 1); }
  const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t n) const {
    return n <= degree() ? coeffs_[static_cast<Eigen::Index>(n)] : Complex{};
  }
  bool is_zero() const noexcept { return degree() == 0 && coeffs_[0] == Complex{}; }

  /// Horner evaluation.
  Complex operator()(Complex z) const;
  AnalyticPoly derivative() const;
  /// z -> f(e^{i phi} z).
  AnalyticPoly rotated(double phi) const;

  friend AnalyticPoly operator*(const AnalyticPoly& f, const AnalyticPoly& g);
  friend AnalyticPoly operator*(Complex s, const AnalyticPoly& f);

private:
  void normalize();
  Eigen::VectorXcd coeffs_;
};

/// Coefficients of the product of two power series, d_n = sum_k a_k b_{n-k}.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                   typename DerivedB::Scalar>::ReturnType,
              Eigen::Dynamic, 1>
cauchy_product(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  using Result = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  if (a.size() == 0 || b.size() == 0) return Result();
  Result d = Result::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    d.segment(i, b.size()) += a(i) * b.derived();
  return d;
}

/// Uniform samples of a polynomial on the unit circle.
struct BoundaryGrid {
  std::size_t size = 0;
  Eigen::VectorXcd samples;  // f(e^{2 pi i j / size})
};

BoundaryGrid sample_boundary(const AnalyticPoly& f, std::size_t m);

/// max(4096, next_pow2(8 (d+1))).
std::size_t default_grid_size(std::size_t degree);

/// ||f||_p on the unit circle for p in {1, 2}. p = 2 uses Parseval on the
/// coefficients. p = 1 uses the uniform trapezoid rule on M and 2M points
/// and accepts the 2M value when the two agree to 1e-13 relative; otherwise
/// (roots on or very near the circle, where |f| has a kink) it falls back to
/// adaptive Gauss-Legendre on the angle. Requires M >= 4(d+1).
double hp_norm(const AnalyticPoly& f, int p, std::size_t m);
double hp_norm(const AnalyticPoly& f, int p);

/// sum_n a_n conj(c_n) over the common index range.
Complex dual_pairing(const AnalyticPoly& f, const AnalyticPoly& g);

/// alpha_n = a_n / |a_n|, and 1 where a_n = 0.
Eigen::VectorXcd phase_sequence(const AnalyticPoly& f);

/// All roots, from the companion matrix eigenvalues followed by a few Newton
/// polishing steps. Roots at the origin are returned exactly.
std::vector<Complex> polynomial_roots(const AnalyticPoly& f);

struct RieszFactors {
  AnalyticPoly g;  // Blaschke part times the square root of the outer part
  AnalyticPoly h;  // square root of the outer part, h(0) > 0
  double residual_max = 0.0;  // max |f - g h| over the sampling grids
  double norm_defect = 0.0;   // | ||f||_1 - ||g||_2 ||h||_2 |
  std::size_t blaschke_degree = 0;
  std::size_t grid_size = 0;
  std::vector<Complex> roots;
};

/// Riesz factorization f = g h with ||f||_1 = ||g||_2 ||h||_2.
///
/// The outer factor is rebuilt from log|f| on the boundary: its Fourier
/// coefficients u_k are mapped to the analytic completion u_0 + 2 sum_{k>0}
/// u_k z^k, halved and exponentiated to give h; g is f / h on the grid.
/// Both are truncated to the nonnegative frequencies the grid resolves and
/// trimmed where their Taylor tails fall below roundoff. The grid starts at
/// max(M, default_grid_size(d)), is enlarged according to the distance of the
/// nearest root from the circle, and doubled until the product residual and
/// norm defect are within 1e-8 (relative to ||f||_2 and ||f||_1).
///
/// Throws DomainError for f = 0, FactorizationSingular when a root lies
/// within 1e-10 of the circle, ConvergenceError when the grid cap is hit.
RieszFactors riesz_factorize(const AnalyticPoly& f, std::size_t m = 0);

}  // namespace hh

#endif  // HARDYHILBERT_HARDYSPACE_HPP

#ifndef HARDYHILBERT_INEQUALITIES_HPP
#define HARDYHILBERT_INEQUALITIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hardyhilbert/hardyspace.hpp"
#include "hardyhilbert/seqspace.hpp"

namespace hh {

/// sum_n |a_n| |c_n| over the shorter of the two index ranges.
double hardy_sum(const AnalyticPoly& f, const XSequence& c);

/// hardy_sum(f, c) / (||c||_X ||f||_1), a lower bound for the best Hardy
/// constant of c. Throws DomainError when f = 0 or ||c||_X = 0.
double hardy_ratio(const AnalyticPoly& f, const XSequence& c, std::size_t m);
double hardy_ratio(const AnalyticPoly& f, const XSequence& c);

struct BilinearForm {
  double value = 0.0;
  bool truncated = false;  // c ended before index len(a) + len(b) - 2
};

/// sum_{n,m} |a_n| |b_m| |c_{n+m}|. Terms with n + m beyond the end of c are
/// dropped and reported through `truncated`.
template <typename DerivedA, typename DerivedB>
BilinearForm hilbert_form_detailed(const Eigen::MatrixBase<DerivedA>& a,
                                   const Eigen::MatrixBase<DerivedB>& b, const XSequence& c) {
  BilinearForm out;
  const Eigen::VectorXd aa = a.cwiseAbs().template cast<double>();
  const Eigen::VectorXd bb = b.cwiseAbs().template cast<double>();
  const auto len = static_cast<Eigen::Index>(c.size());
  if (aa.size() > 0 && bb.size() > 0) out.truncated = aa.size() + bb.size() - 1 > len;
  for (Eigen::Index n = 0; n < aa.size() && n < len; ++n) {
    const Eigen::Index span = std::min(bb.size(), len - n);
    out.value += aa[n] * bb.head(span).dot(c.values().segment(n, span));
  }
  return out;
}

template <typename DerivedA, typename DerivedB>
double hilbert_form(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                    const XSequence& c) {
  return hilbert_form_detailed(a, b, c).value;
}

/// The N x N Hankel matrix H[n][m] = |c_{n+m}|, held as its 2N-1 generating
/// values.
class HankelOperator {
public:
  /// Requires c.size() >= 2N - 1.
  HankelOperator(const XSequence& c, std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const Eigen::VectorXd& generator() const noexcept { return gen_; }

  /// Direct O(N^2) product.
  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& v) const;
  /// O(N log N) product through a linear convolution with the reversed input.
  Eigen::VectorXd apply_fft(const Eigen::Ref<const Eigen::VectorXd>& v) const;
  Eigen::MatrixXd dense() const;

private:
  std::size_t n_;
  Eigen::VectorXd gen_;
  std::size_t fft_size_;
  Eigen::VectorXcd gen_spectrum_;
};

enum class NormMethod { PowerIteration, DenseEigen };
enum class MatVec { Direct, Fft };

struct PowerIterationOptions {
  std::size_t max_iterations = 100'000;
  double rayleigh_tol = 1e-14;
  double residual_tol = 1e-12;
  MatVec matvec = MatVec::Direct;
};

/// Largest matrix size accepted by the dense eigensolver path.
inline constexpr std::size_t kDenseEigenMax = 512;

struct OperatorNormEstimate {
  std::size_t n = 0;
  double value = 0.0;
  NormMethod method = NormMethod::PowerIteration;
  std::size_t iterations = 0;
  double residual = 0.0;         // ||Hv - value v|| / ||v||
  Eigen::VectorXd top_vector;    // unit, entrywise nonnegative
  bool converged = false;
};

/// Spectral norm of H[n][m] = |c_{n+m}|, n, m < N. Power iteration starts
/// from the all-ones vector and stops once the Rayleigh quotient moves by
/// less than `rayleigh_tol` with residual below `residual_tol`; on hitting
/// the iteration cap the estimate comes back with converged = false.
OperatorNormEstimate matrix_norm(const XSequence& c, std::size_t n,
                                 NormMethod method = NormMethod::PowerIteration,
                                 const PowerIterationOptions& opts = {});

/// True when c_k = 1/(k+1) to roundoff for k < n.
bool is_classic(const XSequence& c, std::size_t n);

struct EquivalenceReport {
  std::size_t n = 0;
  double matrix_norm = 0.0;   // B_N, operator norm of the truncated matrix
  double xnorm = 0.0;
  double hardy_ratio = 0.0;   // hardy_sum(f) / (||c||_X ||f||_1)
  /// | hardy_sum(f) / ||f||_1 - B_N |, i.e. the two constants compared on the
  /// same (un-normalized) scale; equals |hardy_ratio - B_N| when ||c||_X = 1.
  double gap = 0.0;
  AnalyticPoly witness;       // f = g^2, g from the top eigenvector
  std::size_t witness_degree = 0;
  std::size_t grid_size = 0;
  bool classic = false;
  std::size_t iterations = 0;
  double residual = 0.0;
};

/// Builds g(z) = sum v_n z^n from the nonnegative top eigenvector v of the
/// N x N Hankel matrix and takes f = g^2, so ||f||_1 = ||g||_2^2 = 1 and
/// sum_n d_n c_n = v^T H v = B_N. The Hardy ratio of f then meets B_N.
/// Throws ConvergenceError if the eigenvector did not converge.
EquivalenceReport equivalence_witness(const XSequence& c, std::size_t n, std::size_t m = 0);

struct ScanRow {
  std::size_t n = 0;
  double norm = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

struct BestConstantScan {
  std::vector<ScanRow> rows;
  bool nondecreasing = true;
  bool strictly_increasing = true;
  bool classic = false;
  /// Only meaningful for the classic sequence: every B_N < pi (the sharp
  /// constant of the classical Hilbert inequality, used as an outside check).
  bool below_pi = true;
};

BestConstantScan best_constant_scan(const XSequence& c, const std::vector<std::size_t>& n_list,
                                    NormMethod method = NormMethod::PowerIteration);

struct DegreeBoundCheck {
  bool skipped = false;
  std::string reason;   // why the check was skipped
  bool holds = false;
  double hardy_sum = 0.0;
  double norm1 = 0.0;
  double matrix_norm = 0.0;  // B_{d+1}
  double bound = 0.0;        // B_{d+1} ||f||_1 (1 + 1e-8)
  double slack = 0.0;        // bound - hardy_sum
};

/// A degree-d polynomial factors through pairs supported on 0..d, so
/// hardy_sum(f, c) <= B_{d+1} ||f||_1. The check runs only when the Riesz
/// factorization accepts f; otherwise it is reported as skipped.
/// Requires c.size() >= 2d + 1.
DegreeBoundCheck hardy_degree_bound_check(const AnalyticPoly& f, const XSequence& c);

}  // namespace hh

#endif  // HARDYHILBERT_INEQUALITIES_HPP

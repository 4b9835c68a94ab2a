#include "hardyhilbert/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/FFT>

#include "hardyhilbert/errors.hpp"
#include "hardyhilbert/quadrature.hpp"

namespace hh {

double hardy_sum(const AnalyticPoly& f, const XSequence& c) {
  const Eigen::Index n = std::min<Eigen::Index>(f.coeffs().size(), static_cast<Eigen::Index>(c.size()));
  return f.coeffs().head(n).cwiseAbs().dot(c.values().head(n));
}

double hardy_ratio(const AnalyticPoly& f, const XSequence& c, std::size_t m) {
  if (f.is_zero()) throw DomainError("hardy_ratio: zero polynomial");
  const double cn = xnorm(c);
  if (cn == 0.0) throw DomainError("hardy_ratio: zero sequence norm");
  return hardy_sum(f, c) / (cn * hp_norm(f, 1, m));
}

double hardy_ratio(const AnalyticPoly& f, const XSequence& c) {
  return hardy_ratio(f, c, default_grid_size(f.degree()));
}

HankelOperator::HankelOperator(const XSequence& c, std::size_t n) : n_(n) {
  if (n == 0) throw ParameterError("HankelOperator: N must be positive");
  if (c.size() < 2 * n - 1) throw ParameterError("HankelOperator: sequence shorter than 2N-1");
  gen_ = c.values().head(static_cast<Eigen::Index>(2 * n - 1));
  fft_size_ = std::max<std::size_t>(2, next_pow2(3 * n - 2));
  std::vector<Complex> in(fft_size_, Complex{});
  for (Eigen::Index k = 0; k < gen_.size(); ++k) in[static_cast<std::size_t>(k)] = gen_[k];
  std::vector<Complex> out;
  Eigen::FFT<double> fft;
  fft.fwd(out, in);
  gen_spectrum_ = Eigen::Map<Eigen::VectorXcd>(out.data(), static_cast<Eigen::Index>(out.size()));
}

Eigen::VectorXd HankelOperator::apply(const Eigen::Ref<const Eigen::VectorXd>& v) const {
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) y[i] = gen_.segment(i, n).dot(v);
  return y;
}

Eigen::VectorXd HankelOperator::apply_fft(const Eigen::Ref<const Eigen::VectorXd>& v) const {
  // y_i = sum_m h_{i+m} v_m = (h * reverse(v))_{i+N-1}
  const auto n = static_cast<Eigen::Index>(n_);
  std::vector<Complex> in(fft_size_, Complex{});
  for (Eigen::Index m = 0; m < n; ++m) in[static_cast<std::size_t>(n - 1 - m)] = v[m];
  std::vector<Complex> spec;
  std::vector<Complex> conv;
  Eigen::FFT<double> fft;
  fft.fwd(spec, in);
  for (std::size_t k = 0; k < spec.size(); ++k) spec[k] *= gen_spectrum_[static_cast<Eigen::Index>(k)];
  fft.inv(conv, spec);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) y[i] = conv[static_cast<std::size_t>(i + n - 1)].real();
  return y;
}

Eigen::MatrixXd HankelOperator::dense() const {
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) h(i, j) = gen_[i + j];
  return h;
}

OperatorNormEstimate matrix_norm(const XSequence& c, std::size_t n, NormMethod method,
                                 const PowerIterationOptions& opts) {
  const HankelOperator op(c, n);
  OperatorNormEstimate est;
  est.n = n;
  est.method = method;
  const auto ni = static_cast<Eigen::Index>(n);

  if (method == NormMethod::DenseEigen) {
    if (n > kDenseEigenMax) throw ParameterError("matrix_norm: dense path limited to N <= 512");
    const Eigen::MatrixXd h = op.dense();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    est.value = es.eigenvalues()[ni - 1];
    Eigen::VectorXd v = es.eigenvectors().col(ni - 1);
    if (v.sum() < 0.0) v = -v;
    est.top_vector = v.cwiseAbs();
    est.residual = (h * est.top_vector - est.value * est.top_vector).norm();
    est.iterations = 1;
    est.converged = true;
    return est;
  }

  auto apply = [&](const Eigen::VectorXd& v) {
    return opts.matvec == MatVec::Fft ? op.apply_fft(v) : op.apply(v);
  };

  Eigen::VectorXd v = Eigen::VectorXd::Constant(ni, 1.0 / std::sqrt(static_cast<double>(n)));
  double previous = 0.0;
  for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
    Eigen::VectorXd w = apply(v);
    const double lambda = v.dot(w);
    est.value = lambda;
    est.residual = (w - lambda * v).norm();
    est.iterations = it;
    est.top_vector = v;
    const double wn = w.norm();
    if (wn == 0.0) {
      est.converged = true;
      break;
    }
    if (it > 1 && std::abs(lambda - previous) < opts.rayleigh_tol && est.residual < opts.residual_tol) {
      est.converged = true;
      break;
    }
    previous = lambda;
    v = w / wn;
    if (opts.matvec == MatVec::Fft) v = v.cwiseMax(0.0);  // FFT roundoff can dip below zero
  }
  return est;
}

bool is_classic(const XSequence& c, std::size_t n) {
  if (c.size() < n) return false;
  for (std::size_t k = 0; k < n; ++k)
    if (std::abs(c[k] - 1.0 / static_cast<double>(k + 1)) > 4e-16 / static_cast<double>(k + 1)) return false;
  return true;
}

EquivalenceReport equivalence_witness(const XSequence& c, std::size_t n, std::size_t m) {
  const OperatorNormEstimate est = matrix_norm(c, n);
  if (!est.converged)
    throw ConvergenceError("equivalence_witness: power iteration did not converge", est.residual);

  EquivalenceReport rep;
  rep.n = n;
  rep.matrix_norm = est.value;
  rep.iterations = est.iterations;
  rep.residual = est.residual;
  rep.xnorm = xnorm(c);
  rep.classic = is_classic(c, 2 * n - 1);

  const AnalyticPoly g(est.top_vector);
  rep.witness = g * g;
  rep.witness_degree = rep.witness.degree();
  rep.grid_size = m == 0 ? default_grid_size(rep.witness_degree) : m;

  const double norm1 = hp_norm(rep.witness, 1, rep.grid_size);
  const double sum = hardy_sum(rep.witness, c);
  rep.hardy_ratio = sum / (rep.xnorm * norm1);
  rep.gap = std::abs(sum / norm1 - rep.matrix_norm);
  return rep;
}

BestConstantScan best_constant_scan(const XSequence& c, const std::vector<std::size_t>& n_list,
                                    NormMethod method) {
  if (!std::is_sorted(n_list.begin(), n_list.end()))
    throw ParameterError("best_constant_scan: N list must be ascending");
  BestConstantScan scan;
  const std::size_t top = n_list.empty() ? 0 : n_list.back();
  scan.classic = top > 0 && is_classic(c, 2 * top - 1);
  for (std::size_t n : n_list) {
    const OperatorNormEstimate est = matrix_norm(c, n, method);
    if (!scan.rows.empty()) {
      const double prev = scan.rows.back().norm;
      if (est.value < prev) scan.nondecreasing = false;
      if (!(est.value > prev)) scan.strictly_increasing = false;
    }
    if (scan.classic && !(est.value < std::numbers::pi)) scan.below_pi = false;
    scan.rows.push_back({n, est.value, est.residual, est.iterations, est.converged});
  }
  return scan;
}

DegreeBoundCheck hardy_degree_bound_check(const AnalyticPoly& f, const XSequence& c) {
  DegreeBoundCheck out;
  const std::size_t d = f.degree();
  if (c.size() < 2 * d + 1) throw ParameterError("hardy_degree_bound_check: sequence shorter than 2d+1");
  try {
    (void)riesz_factorize(f);
  } catch (const Error& e) {
    out.skipped = true;
    out.reason = e.what();
    return out;
  }
  out.hardy_sum = hardy_sum(f, c);
  out.norm1 = hp_norm(f, 1);
  const OperatorNormEstimate est = matrix_norm(c, d + 1);
  if (!est.converged)
    throw ConvergenceError("hardy_degree_bound_check: power iteration did not converge", est.residual);
  out.matrix_norm = est.value;
  out.bound = est.value * out.norm1 * (1.0 + 1e-8);
  out.slack = out.bound - out.hardy_sum;
  out.holds = out.hardy_sum <= out.bound;
  return out;
}

}  // namespace hh

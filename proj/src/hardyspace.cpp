#include "hardyhilbert/hardyspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "hardyhilbert/errors.hpp"
#include "hardyhilbert/quadrature.hpp"

namespace hh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSingularDistance = 1e-10;
constexpr double kFactorTolerance = 1e-8;
constexpr std::size_t kMaxFactorGrid = std::size_t{1} << 22;

Eigen::VectorXcd trimmed(const Eigen::VectorXcd& c, double rel) {
  const double scale = c.norm();
  Eigen::Index n = c.size();
  while (n > 1 && std::abs(c[n - 1]) <= rel * scale) --n;
  return c.head(n);
}

double mean_abs(const Eigen::VectorXcd& v) { return v.cwiseAbs().mean(); }

}  // namespace

AnalyticPoly::AnalyticPoly(const Eigen::Ref<const Eigen::VectorXcd>& coeffs) : coeffs_(coeffs) {
  normalize();
}

AnalyticPoly::AnalyticPoly(const Eigen::Ref<const Eigen::VectorXd>& coeffs)
    : coeffs_(coeffs.cast<Complex>()) {
  normalize();
}

AnalyticPoly::AnalyticPoly(std::initializer_list<Complex> coeffs)
    : coeffs_(static_cast<Eigen::Index>(coeffs.size())) {
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.data());
  normalize();
}

AnalyticPoly AnalyticPoly::monomial(std::size_t k, Complex a) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(k + 1));
  c[static_cast<Eigen::Index>(k)] = a;
  return AnalyticPoly(c);
}

void AnalyticPoly::normalize() {
  Eigen::Index n = coeffs_.size();
  while (n > 1 && coeffs_[n - 1] == Complex{}) --n;
  if (n == 0) {
    coeffs_ = Eigen::VectorXcd::Zero(1);
    return;
  }
  coeffs_.conservativeResize(n);
}

Complex AnalyticPoly::operator()(Complex z) const {
  Complex acc{};
  for (Eigen::Index k = coeffs_.size() - 1; k >= 0; --k) acc = acc * z + coeffs_[k];
  return acc;
}

AnalyticPoly AnalyticPoly::derivative() const {
  if (coeffs_.size() == 1) return AnalyticPoly{};
  Eigen::VectorXcd d(coeffs_.size() - 1);
  for (Eigen::Index k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return AnalyticPoly(d);
}

AnalyticPoly AnalyticPoly::rotated(double phi) const {
  Eigen::VectorXcd c = coeffs_;
  for (Eigen::Index k = 0; k < c.size(); ++k) c[k] *= std::polar(1.0, phi * static_cast<double>(k));
  return AnalyticPoly(c);
}

AnalyticPoly operator*(const AnalyticPoly& f, const AnalyticPoly& g) {
  return AnalyticPoly(Eigen::VectorXcd(cauchy_product(f.coeffs_, g.coeffs_)));
}

AnalyticPoly operator*(Complex s, const AnalyticPoly& f) {
  return AnalyticPoly(Eigen::VectorXcd(s * f.coeffs_));
}

BoundaryGrid sample_boundary(const AnalyticPoly& f, std::size_t m) {
  if (m < 4 * (f.degree() + 1))
    throw ParameterError("sample_boundary: grid size must be at least 4(d+1)");
  return {m, evaluate_on_circle(f.coeffs(), m)};
}

std::size_t default_grid_size(std::size_t degree) {
  return std::max<std::size_t>(4096, next_pow2(8 * (degree + 1)));
}

double hp_norm(const AnalyticPoly& f, int p, std::size_t m) {
  if (p != 1 && p != 2) throw ParameterError("hp_norm: only p = 1 and p = 2 are supported");
  if (m < 4 * (f.degree() + 1)) throw ParameterError("hp_norm: grid size must be at least 4(d+1)");
  if (p == 2) return f.coeffs().norm();
  if (f.degree() == 0) return std::abs(f[0]);

  const double coarse = mean_abs(sample_boundary(f, m).samples);
  const double fine = mean_abs(sample_boundary(f, 2 * m).samples);
  if (std::abs(coarse - fine) <= 1e-13 * fine) return fine;

  // |f| is not resolved by the uniform grid: integrate panel by panel
  constexpr int kPanels = 64;
  const double width = kTwoPi / kPanels;
  const double tol = 1e-13 * fine;
  double total = 0.0;
  for (int k = 0; k < kPanels; ++k) {
    total += integrate_adaptive([&f](double t) { return std::abs(f(std::polar(1.0, t))); },
                                k * width, (k + 1) * width, tol / kPanels);
  }
  return total / kTwoPi;
}

double hp_norm(const AnalyticPoly& f, int p) { return hp_norm(f, p, default_grid_size(f.degree())); }

Complex dual_pairing(const AnalyticPoly& f, const AnalyticPoly& g) {
  const Eigen::Index n = std::min(f.coeffs().size(), g.coeffs().size());
  return g.coeffs().head(n).dot(f.coeffs().head(n));  // dot conjugates its left operand
}

Eigen::VectorXcd phase_sequence(const AnalyticPoly& f) {
  Eigen::VectorXcd alpha(f.coeffs().size());
  for (Eigen::Index n = 0; n < alpha.size(); ++n) {
    const Complex a = f.coeffs()[n];
    alpha[n] = (a == Complex{}) ? Complex{1.0} : a / std::abs(a);
  }
  return alpha;
}

std::vector<Complex> polynomial_roots(const AnalyticPoly& f) {
  if (f.is_zero()) throw DomainError("polynomial_roots: zero polynomial");
  const Eigen::VectorXcd& a = f.coeffs();
  std::vector<Complex> roots;
  Eigen::Index low = 0;
  while (a[low] == Complex{}) {
    roots.emplace_back(0.0, 0.0);
    ++low;
  }
  const Eigen::Index deg = a.size() - 1 - low;
  if (deg == 0) return roots;

  // companion matrix of the monic polynomial a_low + ... + a_d z^deg
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  const Complex lead = a[a.size() - 1];
  for (Eigen::Index i = 0; i < deg; ++i) companion(i, deg - 1) = -a[low + i] / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
  const AnalyticPoly df = f.derivative();
  for (Eigen::Index i = 0; i < deg; ++i) {
    Complex z = es.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {
      const Complex fz = f(z);
      const Complex dz = df(z);
      if (dz == Complex{}) break;
      const Complex next = z - fz / dz;
      if (!(std::abs(f(next)) < std::abs(fz))) break;
      z = next;
    }
    roots.push_back(z);
  }
  return roots;
}

namespace {

struct Attempt {
  Eigen::VectorXcd g;
  Eigen::VectorXcd h;
  double residual = 0.0;
};

Attempt factor_on_grid(const AnalyticPoly& f, std::size_t m) {
  const Eigen::VectorXcd values = evaluate_on_circle(f.coeffs(), m);
  Eigen::VectorXcd log_mod(values.size());
  for (Eigen::Index j = 0; j < values.size(); ++j) log_mod[j] = std::log(std::abs(values[j]));

  // analytic completion of log|f|: keep u_0, double the positive frequencies
  const Eigen::VectorXcd u = circle_coefficients(log_mod);
  const auto half = static_cast<Eigen::Index>(m / 2);
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(half);
  phi[0] = u[0].real();
  phi.tail(half - 1) = 2.0 * u.segment(1, half - 1);

  const Eigen::VectorXcd log_outer = evaluate_on_circle(phi, m);
  Eigen::VectorXcd h_vals(values.size());
  Eigen::VectorXcd g_vals(values.size());
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    h_vals[j] = std::exp(0.5 * log_outer[j]);
    g_vals[j] = values[j] / h_vals[j];
  }

  Attempt out;
  out.h = trimmed(circle_coefficients(h_vals).head(half), 1e-17);
  out.g = trimmed(circle_coefficients(g_vals).head(half), 1e-17);

  // residual on the sampling grid and on the half-step shifted grid
  const double shift = std::numbers::pi / static_cast<double>(m);
  for (int pass = 0; pass < 2; ++pass) {
    const double phase = pass == 0 ? 0.0 : shift;
    const AnalyticPoly fr = f.rotated(phase);
    const AnalyticPoly gr = AnalyticPoly(out.g).rotated(phase);
    const AnalyticPoly hr = AnalyticPoly(out.h).rotated(phase);
    const Eigen::VectorXcd fv = evaluate_on_circle(fr.coeffs(), m);
    const Eigen::VectorXcd gv = evaluate_on_circle(gr.coeffs(), m);
    const Eigen::VectorXcd hv = evaluate_on_circle(hr.coeffs(), m);
    out.residual = std::max(out.residual, (fv - gv.cwiseProduct(hv)).cwiseAbs().maxCoeff());
  }
  return out;
}

}  // namespace

RieszFactors riesz_factorize(const AnalyticPoly& f, std::size_t m) {
  if (f.is_zero()) throw DomainError("riesz_factorize: zero polynomial");

  RieszFactors out;
  out.roots = polynomial_roots(f);
  double nearest = std::numeric_limits<double>::infinity();
  for (const Complex& z : out.roots) {
    const double dist = std::abs(std::abs(z) - 1.0);
    if (dist < kSingularDistance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "riesz_factorize: root " << z.real() << (z.imag() < 0 ? "" : "+") << z.imag()
          << "i lies on the unit circle";
      throw FactorizationSingular(msg.str(), z);
    }
    nearest = std::min(nearest, dist);
    if (std::abs(z) < 1.0) ++out.blaschke_degree;
  }

  std::size_t grid = std::max(m, default_grid_size(f.degree()));
  if (std::isfinite(nearest)) {
    // Fourier tails of log|f| decay like (1 - dist)^k
    const double needed = 80.0 / nearest;
    if (needed < static_cast<double>(kMaxFactorGrid))
      grid = std::max(grid, next_pow2(static_cast<std::size_t>(needed)));
    else
      grid = kMaxFactorGrid;
  }
  grid = next_pow2(grid);

  const double f2 = f.coeffs().norm();
  double worst = 0.0;
  for (;; grid *= 2) {
    Attempt a = factor_on_grid(f, grid);
    const double f1 = hp_norm(f, 1, grid);
    const double defect = std::abs(f1 - a.g.norm() * a.h.norm());
    if (a.residual <= kFactorTolerance * f2 && defect <= kFactorTolerance * f1) {
      out.g = AnalyticPoly(a.g);
      out.h = AnalyticPoly(a.h);
      out.residual_max = a.residual;
      out.norm_defect = defect;
      out.grid_size = grid;
      return out;
    }
    worst = std::max(a.residual / f2, defect / f1);
    if (grid >= kMaxFactorGrid) break;
  }
  throw ConvergenceError("riesz_factorize: truncation residual above tolerance at grid cap", worst);
}

}  // namespace hh

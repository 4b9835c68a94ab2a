#include "hardyhilbert/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include <Eigen/Core>

#include "hardyhilbert/bmoa.hpp"
#include "hardyhilbert/errors.hpp"
#include "hardyhilbert/inequalities.hpp"
#include "hardyhilbert/io.hpp"

namespace hh {

CaseRng::CaseRng(std::uint64_t seed, std::uint64_t property, std::uint64_t case_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(property), static_cast<std::uint32_t>(case_index),
                    static_cast<std::uint32_t>(case_index >> 32)};
  engine_.seed(seq);
}

double CaseRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t CaseRng::integer(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
}

Complex CaseRng::in_disk(double radius) {
  const double rad = radius * std::sqrt(uniform());
  return std::polar(rad, 2.0 * std::numbers::pi * uniform());
}

XSequence sample_xsequence(CaseRng& rng, std::size_t n) {
  if (n == 0) throw ParameterError("sample_xsequence: N must be positive");
  switch (rng.integer(0, 2)) {
    case 0:
      return classic_sequence(n);
    case 1: {
      const double r = rng.uniform(0.5, 1.0);
      const double beta = rng.uniform(1.05, 3.0);
      if (n == 1) return XSequence(std::vector<double>{1.0});
      return slow_decay_sequence(r, beta, n - 1).to_xsequence();
    }
    default: {
      const double p = rng.uniform(0.5, 1.5);
      Eigen::VectorXd v(static_cast<Eigen::Index>(n));
      for (Eigen::Index k = 0; k < v.size(); ++k)
        v[k] = (1.0 - rng.uniform()) / std::pow(static_cast<double>(k + 1), p);
      const XSequence raw(v);
      return raw.scaled(1.0 / xnorm(raw));
    }
  }
}

double root_distance_to_circle(const AnalyticPoly& f) {
  double best = std::numeric_limits<double>::infinity();
  if (f.degree() == 0) return best;
  for (const Complex& z : polynomial_roots(f)) best = std::min(best, std::abs(std::abs(z) - 1.0));
  return best;
}

AnalyticPoly sample_polynomial(CaseRng& rng, std::size_t degree, bool factorizable,
                               double min_root_distance) {
  for (std::size_t d = degree;; --d) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Eigen::VectorXcd a(static_cast<Eigen::Index>(d + 1));
      for (Eigen::Index k = 0; k < a.size(); ++k) a[k] = rng.in_disk();
      const AnalyticPoly f(a);
      if (f.is_zero()) continue;
      if (!factorizable || root_distance_to_circle(f) >= min_root_distance) return f;
    }
    if (d == 0) break;
  }
  return AnalyticPoly{Complex{1.0}};
}

AnalyticPoly sample_polynomial_from_roots(CaseRng& rng, std::size_t degree, double min_root_distance) {
  AnalyticPoly f{rng.in_disk() + Complex{0.1}};
  for (std::size_t k = 0; k < degree; ++k) {
    const bool inside = rng.uniform() < 0.5;
    const double radius = inside ? rng.uniform(0.0, 1.0 - min_root_distance)
                                 : rng.uniform(1.0 + min_root_distance, 3.0);
    const Complex z = std::polar(radius, 2.0 * std::numbers::pi * rng.uniform());
    f = f * AnalyticPoly{-z, Complex{1.0}};
  }
  return Complex{1.0 / f.coeffs().norm()} * f;
}

namespace {

struct CaseResult {
  double margin = 0.0;
  bool passed = true;
  nlohmann::json witness;
};

struct Context {
  const SuiteConfig& config;
  const SuiteHooks& hooks;
};

using CaseFn = CaseResult (*)(CaseRng&, const Context&, std::size_t);

struct Property {
  const char* name;
  std::size_t default_cases;
  CaseFn run;
};

nlohmann::json vec_json(const Eigen::VectorXd& v) {
  return nlohmann::json(std::vector<double>(v.data(), v.data() + v.size()));
}

Eigen::VectorXd random_nonneg(CaseRng& rng, std::size_t n) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < v.size(); ++k) v[k] = rng.uniform();
  return v;
}

CaseResult verdict(double margin, nlohmann::json witness) {
  return {margin, margin >= 0.0, std::move(witness)};
}

// --- seqspace -------------------------------------------------------------

CaseResult xnorm_homogeneity(CaseRng& rng, const Context& ctx, std::size_t) {
  const XSequence c = sample_xsequence(rng, rng.integer(1, 4 * ctx.config.max_sequence_length));
  const double lambda = rng.uniform(0.0, 10.0);
  const double lhs = xnorm(c.scaled(lambda));
  const double rhs = lambda * xnorm(c);
  const double err = std::abs(lhs - rhs) / std::max(rhs, std::numeric_limits<double>::min());
  return verdict(1e-13 - (rhs == 0.0 ? lhs : err), {{"lambda", lambda}, {"c", vec_json(c.values())}});
}

CaseResult xnorm_extension(CaseRng& rng, const Context& ctx, std::size_t) {
  const XSequence c = sample_xsequence(rng, rng.integer(1, 2 * ctx.config.max_sequence_length));
  const XSequence ext = c.extended(random_nonneg(rng, rng.integer(1, 32)));
  return verdict(xnorm(ext) - xnorm(c), {{"c", vec_json(ext.values())}, {"prefix", c.size()}});
}

CaseResult prefix_ratio_consistency(CaseRng& rng, const Context& ctx, std::size_t) {
  const XSequence c = sample_xsequence(rng, rng.integer(1, 4 * ctx.config.max_sequence_length));
  const double mx = prefix_ratios(c).maxCoeff();
  const double err = std::abs(mx - c.xnorm_sq()) / std::max(c.xnorm_sq(), 1e-300);
  return verdict(1e-14 - err, {{"c", vec_json(c.values())}});
}

CaseResult windowed_bound(CaseRng& rng, const Context& ctx, std::size_t) {
  const XSequence c = sample_xsequence(rng, rng.integer(2, 4 * ctx.config.max_sequence_length));
  const std::size_t m = rng.integer(0, c.size() - 1);
  const std::size_t n = rng.integer(0, c.size() - 1 - m);
  const long double window = c.weighted_prefix(m + n) - (m == 0 ? 0.0L : c.weighted_prefix(m - 1));
  const double bound = c.xnorm_sq() * static_cast<double>(m + n + 1);
  return verdict(1.0 - static_cast<double>(window) / (bound * (1.0 + 1e-12)),
                 {{"c", vec_json(c.values())}, {"m", m}, {"n", n}});
}

CaseResult slow_decay_certificate(CaseRng& rng, const Context&, std::size_t) {
  const double r = rng.uniform(0.5, 1.0);
  const double beta = rng.uniform(1.01, 4.0);
  const std::size_t n = rng.integer(1, 20000);
  const SlowDecayTrace t = slow_decay_sequence(r, beta, n);
  const DecayCertificate cert = verify_decay_bound(t);
  bool exact = t.values.front() == 1.0;
  for (std::size_t k = 1; k <= n && exact; ++k) {
    const double kd = static_cast<double>(k);
    const double expect = t.choice[k - 1] == DecayChoice::Power ? std::pow(kd, -r) : 1.0 / kd;
    exact = t.values[k - 1] == expect;
  }
  const double embed = 2.0 * std::sqrt(beta) - xnorm(t.to_xsequence());
  double margin = std::min(cert.worst_margin, embed);
  if (!cert.holds || !exact) margin = std::min(margin, -1.0);
  return verdict(margin, {{"r", r}, {"beta", beta}, {"N", n}});
}

CaseResult slow_decay_infinitude(CaseRng& rng, const Context&, std::size_t) {
  const double r = rng.uniform(0.6, 0.9);
  const double beta = rng.uniform(1.2, 2.0);
  const SlowDecayTrace t = slow_decay_sequence(r, beta, 100000);
  const InfinitudeReport rep = infinitude_report(t, r + 0.1);
  return verdict(rep.growing ? 1.0 : -1.0, {{"r", r}, {"beta", beta}, {"N", 100000}, {"s", r + 0.1}});
}

// --- inequalities ---------------------------------------------------------

CaseResult bridge_identity(CaseRng& rng, const Context& ctx, std::size_t) {
  const Eigen::VectorXd a = random_nonneg(rng, rng.integer(1, 64));
  const Eigen::VectorXd b = random_nonneg(rng, rng.integer(1, 64));
  const XSequence c = sample_xsequence(rng, static_cast<std::size_t>(a.size() + b.size() - 1));
  const double lhs = ctx.hooks.hilbert_form ? ctx.hooks.hilbert_form(a, b, c) : hilbert_form(a, b, c);
  const AnalyticPoly d(Eigen::VectorXd(cauchy_product(a, b)));
  const double rhs = hardy_sum(d, c);
  const double err = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
  return verdict(ctx.config.identity_tol - err,
                 {{"a", vec_json(a)}, {"b", vec_json(b)}, {"c", vec_json(c.values())}, {"rel_err", err}});
}

CaseResult hilbert_symmetry(CaseRng& rng, const Context& ctx, std::size_t) {
  const Eigen::VectorXd a = random_nonneg(rng, rng.integer(1, 64));
  const Eigen::VectorXd b = random_nonneg(rng, rng.integer(1, 64));
  const XSequence c = sample_xsequence(rng, static_cast<std::size_t>(a.size() + b.size() - 1));
  const double ab = hilbert_form(a, b, c);
  const double ba = hilbert_form(b, a, c);
  const double err = std::abs(ab - ba) / std::max(ab, 1e-300);
  return verdict(ctx.config.identity_tol - err, {{"a", vec_json(a)}, {"b", vec_json(b)}, {"c", vec_json(c.values())}});
}

CaseResult hilbert_inequality(CaseRng& rng, const Context& ctx, std::size_t) {
  const std::size_t len = rng.integer(1, std::min<std::size_t>(48, ctx.config.max_sequence_length));
  const Eigen::VectorXd a = random_nonneg(rng, len);
  const Eigen::VectorXd b = random_nonneg(rng, rng.integer(1, len));
  const XSequence c = sample_xsequence(rng, 2 * len - 1);
  const OperatorNormEstimate est = matrix_norm(c, len);
  const double lhs = hilbert_form(a, b, c);
  const double rhs = est.value * a.norm() * b.norm() * (1.0 + ctx.config.inequality_tol);
  return verdict(est.converged ? 1.0 - lhs / rhs : -1.0,
                 {{"a", vec_json(a)}, {"b", vec_json(b)}, {"c", vec_json(c.values())}});
}

CaseResult hankel_fft_agreement(CaseRng& rng, const Context&, std::size_t) {
  const std::size_t n = rng.integer(1, 300);
  const XSequence c = sample_xsequence(rng, 2 * n - 1);
  const HankelOperator op(c, n);
  const Eigen::VectorXd v = random_nonneg(rng, n);
  const Eigen::VectorXd y = op.apply(v);
  const double err = (y - op.apply_fft(v)).cwiseAbs().maxCoeff();
  return verdict(1e-13 * std::max(1.0, y.cwiseAbs().maxCoeff()) - err, {{"N", n}, {"c", vec_json(c.values())}});
}

CaseResult power_vs_dense(CaseRng& rng, const Context&, std::size_t) {
  const std::size_t n = rng.integer(1, 128);
  const XSequence c = sample_xsequence(rng, 4 * n - 1);
  const OperatorNormEstimate pw = matrix_norm(c, n);
  const OperatorNormEstimate dn = matrix_norm(c, n, NormMethod::DenseEigen);
  const OperatorNormEstimate bigger = matrix_norm(c, 2 * n);
  const double agree = 1e-10 * std::max(1.0, dn.value) - std::abs(pw.value - dn.value);
  const double mono = bigger.value - pw.value + 1e-13 * bigger.value;
  const double margin = (pw.converged && bigger.converged) ? std::min(agree, mono) : -1.0;
  return verdict(margin, {{"N", n}, {"c", vec_json(c.values())}});
}

CaseResult witness_closure(CaseRng& rng, const Context& ctx, std::size_t) {
  const std::size_t n = rng.integer(1, 48);
  const XSequence c = sample_xsequence(rng, 2 * n - 1);
  const EquivalenceReport rep = equivalence_witness(c, n);
  return verdict(ctx.config.witness_tol * std::max(1.0, rep.matrix_norm) - rep.gap,
                 {{"N", n}, {"c", vec_json(c.values())}, {"gap", rep.gap}});
}

CaseResult best_constant_monotone(CaseRng& rng, const Context&, std::size_t) {
  const XSequence c = sample_xsequence(rng, 127);
  const BestConstantScan scan = best_constant_scan(c, {1, 2, 4, 8, 16, 32, 64});
  double margin = 1.0;
  for (std::size_t i = 1; i < scan.rows.size(); ++i)
    margin = std::min(margin, scan.rows[i].norm - scan.rows[i - 1].norm);
  if (scan.classic && !scan.below_pi) margin = -1.0;
  return verdict(margin, {{"c", vec_json(c.values())}});
}

CaseResult hardy_degree_bound(CaseRng& rng, const Context& ctx, std::size_t case_index) {
  const std::size_t d = rng.integer(0, ctx.config.max_degree);
  const AnalyticPoly f = case_index % 2 == 0 ? sample_polynomial(rng, d, true)
                                             : sample_polynomial_from_roots(rng, d);
  const XSequence c = sample_xsequence(rng, 2 * f.degree() + 1);
  const DegreeBoundCheck chk = hardy_degree_bound_check(f, c);
  nlohmann::json w = {{"f", io::coeffs_json(f)}, {"c", vec_json(c.values())}};
  if (chk.skipped) {
    w["skipped"] = chk.reason;
    return verdict(-1.0, w);
  }
  const double ratio = hardy_ratio(f, c);
  const double cap = chk.matrix_norm * (1.0 + ctx.config.inequality_tol);
  return verdict(std::min(chk.slack / chk.bound, 1.0 - ratio / cap), w);
}

// --- hardyspace -----------------------------------------------------------

CaseResult quadrature_square(CaseRng& rng, const Context& ctx, std::size_t case_index) {
  const std::size_t d = rng.integer(0, 32);
  const AnalyticPoly g = case_index % 2 == 0 ? sample_polynomial(rng, d, true)
                                             : sample_polynomial_from_roots(rng, d);
  const AnalyticPoly sq = g * g;
  const double lhs = hp_norm(sq, 1, std::max(ctx.config.grid, default_grid_size(sq.degree())));
  const double rhs = std::pow(hp_norm(g, 2), 2);
  return verdict(ctx.config.quadrature_tol - std::abs(lhs - rhs), {{"g", io::coeffs_json(g)}});
}

CaseResult norm_monotonicity(CaseRng& rng, const Context& ctx, std::size_t) {
  const AnalyticPoly f = sample_polynomial(rng, rng.integer(0, 32), false);
  const double n1 = hp_norm(f, 1, std::max(ctx.config.grid, default_grid_size(f.degree())));
  const double n2 = hp_norm(f, 2);
  return verdict(n2 * (1.0 + 1e-12) - n1, {{"f", io::coeffs_json(f)}});
}

CaseResult dual_pairing_phase(CaseRng& rng, const Context&, std::size_t) {
  const AnalyticPoly f = sample_polynomial(rng, rng.integer(0, 32), false);
  const XSequence c = sample_xsequence(rng, f.degree() + 1);
  const Eigen::VectorXcd alpha = phase_sequence(f);
  Eigen::VectorXcd gc(alpha.size());
  for (Eigen::Index k = 0; k < gc.size(); ++k) gc[k] = alpha[k] * c.values()[k];
  const Complex pairing = dual_pairing(f, AnalyticPoly(gc));
  const double direct = hardy_sum(f, c);
  const double err = std::abs(pairing - Complex{direct}) / std::max(direct, 1e-300);
  const double self = std::abs(dual_pairing(f, f) - Complex{std::pow(hp_norm(f, 2), 2)});
  return verdict(std::min(1e-13 - err, 1e-12 * std::max(1.0, f.coeffs().squaredNorm()) - self),
                 {{"f", io::coeffs_json(f)}, {"c", vec_json(c.values())}});
}

CaseResult factorization_contract(CaseRng& rng, const Context& ctx, std::size_t case_index) {
  const std::size_t d = rng.integer(0, ctx.config.max_degree);
  const AnalyticPoly f = case_index % 2 == 0 ? sample_polynomial(rng, d, true)
                                             : sample_polynomial_from_roots(rng, d);
  const RieszFactors rf = riesz_factorize(f, ctx.config.grid);
  const double f1 = hp_norm(f, 1);
  const double f2 = hp_norm(f, 2);
  const double res = rf.residual_max / (ctx.config.factor_tol * f2);
  const double def = std::abs(f1 - rf.g.coeffs().norm() * rf.h.coeffs().norm()) / (ctx.config.factor_tol * f1);
  return verdict(1.0 - std::max(res, def), {{"f", io::coeffs_json(f)}});
}

// --- bmoa -----------------------------------------------------------------

CaseResult carleson_boundedness(CaseRng& rng, const Context&, std::size_t) {
  const XSequence c = sample_xsequence(rng, 2048);
  const CarlesonReport rep = carleson_constant(c, dyadic_arc_family(8), 64, 256);
  const BoundednessVerdict v = carleson_bounded(rep);
  double margin = 1.0;
  double running = 0.0;
  for (std::size_t i = 0; i < v.depths.size(); ++i) {
    running = std::max(running, v.depth_max[i]);
    if (v.depths[i] >= 4 && i + 2 < v.depths.size())
      margin = std::min(margin, 1.0 - v.depth_max[i + 2] / (1.5 * running));
  }
  return verdict(margin, {{"c", vec_json(c.values())}, {"depth", 8}});
}

CaseResult carleson_homogeneity(CaseRng& rng, const Context&, std::size_t) {
  const AnalyticPoly g = sample_polynomial(rng, rng.integer(1, 16), false);
  const Arc arc(rng.uniform(0.0, 2.0 * std::numbers::pi), std::ldexp(1.0, -static_cast<int>(rng.integer(0, 6))));
  const double lambda = rng.uniform(0.1, 5.0);
  const double base = carleson_box_integral(g, arc, 64, 64);
  const double scaled = carleson_box_integral(Complex{lambda} * g, arc, 64, 64);
  const double err = std::abs(scaled - lambda * lambda * base) / std::max(lambda * lambda * base, 1e-300);
  return verdict(1e-12 - err, {{"g", io::coeffs_json(g)}, {"center", arc.center}, {"length", arc.length}});
}

CaseResult k_constant_bound(CaseRng& rng, const Context&, std::size_t) {
  const double r1 = rng.uniform(0.05, 1.0 - 1e-4);
  const double r2 = rng.uniform(r1, 1.0 - 1e-4);
  const KConstantEstimate k1 = k_constant(r1);
  const KConstantEstimate k2 = k_constant(r2);
  const double cap = k_constant_limit() * (1.0 + 1e-9);
  return verdict(std::min(k2.grid_max - k1.grid_max, cap - k2.grid_max), {{"r1", r1}, {"r2", r2}});
}

CaseResult bmo_homogeneity(CaseRng& rng, const Context&, std::size_t) {
  const AnalyticPoly g = sample_polynomial(rng, rng.integer(0, 8), false);
  const double lambda = rng.uniform(0.1, 5.0);
  const double base = bmo_seminorm(g, 5, 1024);
  const double scaled = bmo_seminorm(Complex{lambda} * g, 5, 1024);
  // constants give roundoff-sized oscillation, so measure against ||g||_2 as well
  const double err = std::abs(scaled - lambda * base) / (lambda * (base + g.coeffs().norm()));
  return verdict(1e-12 - err, {{"g", io::coeffs_json(g)}, {"lambda", lambda}});
}

const std::vector<Property>& properties() {
  static const std::vector<Property> list = {
      {"xnorm_homogeneity", 50, xnorm_homogeneity},
      {"xnorm_extension_monotonicity", 50, xnorm_extension},
      {"prefix_ratio_consistency", 20, prefix_ratio_consistency},
      {"windowed_sum_bound", 50, windowed_bound},
      {"slow_decay_certificate", 20, slow_decay_certificate},
      {"slow_decay_infinitude", 4, slow_decay_infinitude},
      {"bridge_identity", 200, bridge_identity},
      {"hilbert_symmetry", 100, hilbert_symmetry},
      {"hilbert_inequality", 50, hilbert_inequality},
      {"hankel_fft_agreement", 20, hankel_fft_agreement},
      {"power_vs_dense", 10, power_vs_dense},
      {"witness_closure", 10, witness_closure},
      {"best_constant_monotone", 3, best_constant_monotone},
      {"hardy_degree_bound", 30, hardy_degree_bound},
      {"quadrature_square", 30, quadrature_square},
      {"norm_monotonicity", 30, norm_monotonicity},
      {"dual_pairing_phase", 30, dual_pairing_phase},
      {"factorization_contract", 30, factorization_contract},
      {"carleson_boundedness", 2, carleson_boundedness},
      {"carleson_homogeneity", 5, carleson_homogeneity},
      {"k_constant_bound", 5, k_constant_bound},
      {"bmo_homogeneity", 5, bmo_homogeneity},
  };
  return list;
}

std::string environment_fingerprint() {
  std::string env = "compiler=";
#if defined(__VERSION__)
  env += __VERSION__;
#else
  env += "unknown";
#endif
  env += ";eigen=" + std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
         std::to_string(EIGEN_MINOR_VERSION);
  env += ";long_double_digits=" + std::to_string(std::numeric_limits<long double>::digits);
  return env;
}

}  // namespace

std::vector<std::string> suite_property_names() {
  std::vector<std::string> out;
  for (const Property& p : properties()) out.emplace_back(p.name);
  return out;
}

SuiteReport run_suite(const SuiteConfig& config, const SuiteHooks& hooks) {
  const Context ctx{config, hooks};
  SuiteReport report;
  report.seed = config.seed;
  report.environment = environment_fingerprint();

  nlohmann::json counts = nlohmann::json::object();
  const auto& props = properties();
  for (std::size_t pid = 0; pid < props.size(); ++pid) {
    const Property& prop = props[pid];
    const auto it = config.counts.find(prop.name);
    const std::size_t n_cases = it == config.counts.end() ? prop.default_cases : it->second;
    counts[prop.name] = n_cases;

    std::vector<CaseResult> results(n_cases);
    auto run_case = [&](std::size_t i) {
      CaseRng rng(config.seed, pid, i);
      try {
        results[i] = prop.run(rng, ctx, i);
      } catch (const std::exception& e) {
        results[i] = {-1.0, false, {{"exception", e.what()}}};
      }
      results[i].witness["case"] = i;
    };

    const std::size_t workers = std::min(std::max<std::size_t>(config.threads, 1), n_cases);
    if (workers <= 1) {
      for (std::size_t i = 0; i < n_cases; ++i) run_case(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < n_cases; i = next++) run_case(i);
        });
    }

    PropertyRecord rec;
    rec.name = prop.name;
    rec.cases = n_cases;
    rec.worst_margin = std::numeric_limits<double>::infinity();
    for (const CaseResult& r : results) {
      rec.worst_margin = std::min(rec.worst_margin, r.margin);
      if (!r.passed) {
        ++rec.failures;
        if (rec.witnesses.size() < 5) rec.witnesses.push_back(r.witness);
      }
    }
    if (rec.failures > 0) report.pass = false;
    report.properties.push_back(std::move(rec));
  }

  report.config = {{"seed", config.seed},
                   {"counts", counts},
                   {"max_sequence_length", config.max_sequence_length},
                   {"max_degree", config.max_degree},
                   {"grid", config.grid},
                   {"identity_tol", config.identity_tol},
                   {"inequality_tol", config.inequality_tol},
                   {"factor_tol", config.factor_tol},
                   {"witness_tol", config.witness_tol},
                   {"quadrature_tol", config.quadrature_tol}};
  return report;
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json props = nlohmann::json::array();
  for (const PropertyRecord& p : report.properties) {
    props.push_back({{"name", p.name},
                     {"cases", p.cases},
                     {"failures", p.failures},
                     {"worst_margin", p.worst_margin},
                     {"witnesses", p.witnesses}});
  }
  return {{"properties", props},
          {"pass", report.pass},
          {"seed", report.seed},
          {"environment", report.environment},
          {"config", report.config}};
}

}  // namespace hh

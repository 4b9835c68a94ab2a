// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "hardyhilbert/bmoa.hpp"
#include "hardyhilbert/errors.hpp"
#include "hardyhilbert/harness.hpp"
#include "hardyhilbert/inequalities.hpp"
#include "hardyhilbert/io.hpp"
#include "hardyhilbert/seqspace.hpp"

namespace {

using hh::AnalyticPoly;
constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void note(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

std::string num(double x) { return hh::io::format_double(x); }

Outcome classic_unit_norm() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t n : {10u, 1000u, 100000u}) {
    const hh::XSequence c = hh::classic_sequence(n);
    worst = std::max(worst, std::abs(hh::xnorm(c) - 1.0));
    for (double r : hh::prefix_ratios(c)) worst = std::max(worst, std::abs(r - 1.0));
  }
  note(o, worst <= 1e-14, "max deviation " + num(worst));
  if (o.pass) o.detail = "max deviation " + num(worst);
  return o;
}

Outcome bridge_identity() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t i = 0; i < 1000; ++i) {
    hh::CaseRng rng(kSeed, 1000, i);
    const auto la = static_cast<Eigen::Index>(rng.integer(1, 64));
    const auto lb = static_cast<Eigen::Index>(rng.integer(1, 64));
    Eigen::VectorXd a(la), b(lb);
    for (auto& x : a) x = rng.uniform();
    for (auto& x : b) x = rng.uniform();
    const hh::XSequence c = hh::sample_xsequence(rng, static_cast<std::size_t>(la + lb - 1));
    const double form = hh::hilbert_form(a, b, c);
    const double sum = hh::hardy_sum(AnalyticPoly(hh::cauchy_product(a, b).eval()), c);
    worst = std::max(worst, std::abs(form - sum) / form);
  }
  note(o, worst <= 1e-12, "worst relative error " + num(worst));
  if (o.pass) o.detail = "worst relative error " + num(worst);
  return o;
}

Outcome equivalence_witness() {
  Outcome o;
  const hh::XSequence c = hh::classic_sequence(1024);
  double worst = 0.0;
  for (std::size_t n : {2u, 16u, 64u, 256u}) {
    const hh::EquivalenceReport r = hh::equivalence_witness(c, n, n == 256 ? (1u << 16) : 0);
    const double gap = std::abs(r.hardy_ratio - r.matrix_norm);
    worst = std::max(worst, gap);
    note(o, gap <= 1e-6, "N=" + std::to_string(n) + " gap " + num(gap));
    if (n == 2) {
      const double closed = (4.0 + std::sqrt(13.0)) / 6.0;
      note(o, std::abs(r.matrix_norm - closed) <= 1e-10, "N=2 value " + num(r.matrix_norm));
    }
  }
  if (o.pass) o.detail = "worst gap " + num(worst);
  return o;
}

Outcome monotone_constants() {
  Outcome o;
  const hh::XSequence c = hh::classic_sequence(2048);
  std::vector<std::size_t> ns;
  for (std::size_t n = 2; n <= 1024; n *= 2) ns.push_back(n);
  const hh::BestConstantScan scan = hh::best_constant_scan(c, ns);
  note(o, scan.strictly_increasing, "not strictly increasing");
  note(o, scan.below_pi, "a value reached pi");
  for (const hh::ScanRow& row : scan.rows) note(o, row.converged, "N=" + std::to_string(row.n) + " unconverged");
  double worst = 0.0;
  for (const hh::ScanRow& row : scan.rows) {
    if (row.n > hh::kDenseEigenMax) continue;
    const double dense = hh::matrix_norm(c, row.n, hh::NormMethod::DenseEigen).value;
    worst = std::max(worst, std::abs(dense - row.norm));
  }
  note(o, worst <= 1e-10, "dense vs power " + num(worst));
  if (o.pass) o.detail = "B_1024 = " + num(scan.rows.back().norm) + ", dense vs power " + num(worst);
  return o;
}

Outcome quadrature_exactness() {
  Outcome o;
  const double e = std::abs(hh::hp_norm(AnalyticPoly{1.0, 1.0}, 1, 4096) - 4.0 / kPi);
  note(o, e <= 1e-10, "||1+z||_1 error " + num(e));
  double worst = 0.0;
  for (std::size_t i = 0; i < 100; ++i) {
    hh::CaseRng rng(kSeed, 1005, i);
    const std::size_t d = rng.integer(0, 32);
    const AnalyticPoly g = i % 2 == 0 ? hh::sample_polynomial(rng, d, true) : hh::sample_polynomial_from_roots(rng, d);
    const AnalyticPoly sq = g * g;
    const double lhs = hh::hp_norm(sq, 1, std::max<std::size_t>(4096, hh::default_grid_size(sq.degree())));
    worst = std::max(worst, std::abs(lhs - std::pow(hh::hp_norm(g, 2), 2)));
  }
  note(o, worst <= 1e-10, "||g^2||_1 error " + num(worst));
  if (o.pass) o.detail = "||1+z||_1 error " + num(e) + ", ||g^2||_1 error " + num(worst);
  return o;
}

Outcome factorization_contract() {
  Outcome o;
  double worst_res = 0.0;
  double worst_norm = 0.0;
  std::size_t accepted = 0;
  for (std::size_t i = 0; accepted < 100 && i < 1000; ++i) {
    hh::CaseRng rng(kSeed, 1006, i);
    const std::size_t d = rng.integer(1, 16);
    const AnalyticPoly f = i % 2 == 0 ? hh::sample_polynomial(rng, d, true) : hh::sample_polynomial_from_roots(rng, d);
    hh::RieszFactors rf;
    try {
      rf = hh::riesz_factorize(f);
    } catch (const hh::FactorizationSingular&) {
      continue;
    }
    ++accepted;
    const double f1 = hh::hp_norm(f, 1);
    worst_res = std::max(worst_res, rf.residual_max / hh::hp_norm(f, 2));
    worst_norm = std::max(worst_norm, std::abs(f1 - rf.g.coeffs().norm() * rf.h.coeffs().norm()) / f1);
  }
  note(o, accepted == 100, "only " + std::to_string(accepted) + " accepted");
  note(o, worst_res <= 1e-8, "residual " + num(worst_res));
  note(o, worst_norm <= 1e-8, "norm defect " + num(worst_norm));
  if (o.pass) o.detail = "relative residual " + num(worst_res) + ", relative norm defect " + num(worst_norm);
  return o;
}

Outcome degree_bound() {
  Outcome o;
  double worst = -1e300;
  std::size_t checked = 0;
  for (std::size_t i = 0; checked < 200 && i < 2000; ++i) {
    hh::CaseRng rng(kSeed, 1007, i);
    const AnalyticPoly f = hh::sample_polynomial(rng, rng.integer(0, 12), true);
    const hh::XSequence raw = hh::sample_xsequence(rng, 2 * f.degree() + 1);
    const hh::XSequence c = raw.scaled(1.0 / hh::xnorm(raw));
    const hh::DegreeBoundCheck chk = hh::hardy_degree_bound_check(f, c);
    if (chk.skipped) continue;
    ++checked;
    const double ratio = hh::hardy_ratio(f, c);
    const double excess = ratio / (chk.matrix_norm * (1.0 + 1e-8)) - 1.0;
    worst = std::max(worst, excess);
    note(o, chk.holds && excess <= 0.0, "case " + std::to_string(i) + " excess " + num(excess));
  }
  note(o, checked == 200, "only " + std::to_string(checked) + " pairs checked");
  if (o.pass) o.detail = "largest ratio/bound - 1 = " + num(worst);
  return o;
}

Outcome k_constant() {
  Outcome o;
  const hh::KConstantEstimate k = hh::k_constant(1.0 - 1e-6);
  const double gap = std::abs(k.grid_max - hh::k_constant_limit());
  note(o, gap <= 1e-3, "grid max " + num(k.grid_max));
  const double half = std::abs(hh::k_function(0.5) - 64.0 / 225.0);
  note(o, half <= 1e-14, "k(0.5) error " + num(half));
  if (o.pass) o.detail = "grid max " + num(k.grid_max) + " vs limit " + num(hh::k_constant_limit());
  return o;
}

Outcome carleson_boundedness() {
  Outcome o;
  const std::size_t n = 16384;
  struct Named {
    std::string name;
    hh::XSequence c;
  };
  const std::vector<Named> seqs = {
      {"classic", hh::classic_sequence(n)},
      {"slow(0.6,1.5)", hh::slow_decay_sequence(0.6, 1.5, n - 1).to_xsequence()},
      {"slow(0.75,2)", hh::slow_decay_sequence(0.75, 2.0, n - 1).to_xsequence()},
  };
  const std::vector<hh::Arc> family = hh::dyadic_arc_family(12);
  for (const Named& s : seqs) {
    const hh::CarlesonReport rep = hh::carleson_constant(s.c, family, 256, 256);
    const hh::BoundednessVerdict v = hh::carleson_bounded(rep);
    note(o, v.bounded, s.name + " diverges at depth " + std::to_string(v.first_violation));
    o.detail += (o.detail.empty() ? "" : "; ") + s.name + " sup " + num(rep.sup_ratio) + " vs 2K||c||^2 " +
                num(rep.bound_2k) + (rep.pass ? " (within)" : " (exceeds)");
  }
  return o;
}

Outcome slow_decay() {
  Outcome o;
  const std::pair<double, double> params[] = {{0.6, 1.5}, {0.75, 2.0}, {0.9, 1.2}};
  for (const auto& [r, beta] : params) {
    const std::string tag = "(" + num(r) + "," + num(beta) + ")";
    const hh::SlowDecayTrace big = hh::slow_decay_sequence(r, beta, 1'000'000);
    const hh::SlowDecayTrace small = hh::slow_decay_sequence(r, beta, 100'000);
    const hh::DecayCertificate cert = hh::verify_decay_bound(big);
    note(o, cert.holds, tag + " margin " + num(cert.worst_margin));
    const hh::InfinitudeReport big_rep = hh::infinitude_report(big, r + 0.1);
    const hh::InfinitudeReport small_rep = hh::infinitude_report(small, r + 0.1);
    note(o, big_rep.largest_power_index > 100'000, tag + " no POWER index beyond 1e5");
    note(o, big_rep.power_count > small_rep.power_count, tag + " POWER count did not grow");
    note(o, big_rep.growing, tag + " running maxima not increasing");
    o.detail += (o.detail.empty() ? "" : "; ") + tag + " POWER " + std::to_string(small_rep.power_count) + " -> " +
                std::to_string(big_rep.power_count);
  }
  return o;
}

Outcome suite_determinism() {
  Outcome o;
  hh::SuiteConfig cfg;
  cfg.seed = kSeed;
  const hh::SuiteReport a = hh::run_suite(cfg);
  const hh::SuiteReport b = hh::run_suite(cfg);
  note(o, hh::to_json(a).dump() == hh::to_json(b).dump(), "reports differ");
  std::size_t failures = 0;
  for (const hh::PropertyRecord& p : a.properties) {
    failures += p.failures;
    if (p.failures > 0) note(o, false, p.name + " failed " + std::to_string(p.failures));
  }
  note(o, a.pass, "suite verdict is fail");
  if (o.pass) o.detail = std::to_string(a.properties.size()) + " properties, 0 failures";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // <= 0: no runtime limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "classic sequence has unit norm", 1, classic_unit_norm},
      {2, "bridge identity", 5, bridge_identity},
      {3, "equivalence witness closes the gap", 30, equivalence_witness},
      {4, "monotone constants below pi", 60, monotone_constants},
      {5, "boundary quadrature exactness", 0, quadrature_exactness},
      {6, "factorization contract", 60, factorization_contract},
      {7, "degree bound", 0, degree_bound},
      {8, "K constant", 0, k_constant},
      {9, "Carleson boundedness", 120, carleson_boundedness},
      {10, "slow decay sequences", 30, slow_decay},
      {11, "suite determinism", 0, suite_determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      out.pass = false;
      out.detail += "; runtime " + num(secs) + " s over limit " + num(c.limit_seconds) + " s";
    }
    if (!out.pass) ++failed;
    std::printf("%s [%d] %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.id, c.title, out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

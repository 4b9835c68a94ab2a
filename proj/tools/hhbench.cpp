#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardyhilbert/bmoa.hpp"
#include "hardyhilbert/errors.hpp"
#include "hardyhilbert/harness.hpp"
#include "hardyhilbert/inequalities.hpp"
#include "hardyhilbert/io.hpp"
#include "hardyhilbert/seqspace.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kPropertyFailure = 1, kUsage = 2, kNumerical = 3 };

struct Common {
  std::string format = "json";
  std::string out;
};

struct Result {
  std::string data;
  int code = kOk;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--out", common.out, "Output path (default: standard output)");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

hh::XSequence load_sequence(const std::string& path, std::size_t default_length) {
  if (path.empty()) return hh::classic_sequence(default_length);
  std::ifstream in(path);
  if (!in) throw hh::ParameterError("cannot open sequence file '" + path + "'");
  return hh::io::read_sequence_csv(in);
}

hh::AnalyticPoly load_polynomial(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hh::ParameterError("cannot open polynomial file '" + path + "'");
  return hh::io::read_polynomial_csv(in);
}

std::string source_name(const std::string& path) { return path.empty() ? "classic" : path; }

// xnorm

struct XnormArgs {
  std::string seq;
  std::size_t length = 100;
};

Result run_xnorm(const XnormArgs& a, const Common& common) {
  const hh::XSequence c = load_sequence(a.seq, a.length);
  const Eigen::VectorXd pr = hh::prefix_ratios(c);
  const std::vector<double> ratios(pr.data(), pr.data() + pr.size());
  Result r;
  if (common.format == "csv") {
    std::ostringstream os;
    os << "index,prefix_ratio\n";
    for (std::size_t k = 0; k < ratios.size(); ++k) os << k << ',' << hh::io::format_double(ratios[k]) << '\n';
    r.data = os.str();
  } else {
    r.data = dump({{"parameters", {{"sequence", source_name(a.seq)}, {"length", c.size()}}},
                   {"n", c.size()},
                   {"norm", hh::xnorm(c)},
                   {"prefix_ratios", ratios}});
  }
  return r;
}

// slowdecay

struct SlowDecayArgs {
  double r = 0.6;
  double beta = 1.5;
  std::size_t n = 100000;
  std::optional<double> s;
};

Result run_slowdecay(const SlowDecayArgs& a, const Common& common) {
  const hh::SlowDecayTrace t = hh::slow_decay_sequence(a.r, a.beta, a.n);
  const double s = a.s.value_or(a.r + 0.1);
  const hh::DecayCertificate cert = hh::verify_decay_bound(t);
  const hh::InfinitudeReport inf = hh::infinitude_report(t, s);
  Result res;
  res.code = cert.holds ? kOk : kPropertyFailure;
  if (common.format == "csv") {
    std::ostringstream os;
    hh::io::write_trace_csv(os, t);
    res.data = os.str();
  } else {
    res.data = dump({{"parameters", {{"r", a.r}, {"beta", a.beta}, {"n", a.n}, {"s", s}}},
                     {"xnorm", hh::xnorm(t.to_xsequence())},
                     {"certificate", hh::io::to_json(cert)},
                     {"infinitude", hh::io::to_json(inf)}});
  }
  return res;
}

// hilbert-norm

struct HilbertNormArgs {
  std::vector<std::size_t> n_list = {1, 2, 4, 8, 16, 32, 64, 128, 256};
  std::string method = "power";
  std::string seq;
};

Result run_hilbert_norm(const HilbertNormArgs& a, const Common& common) {
  if (a.n_list.empty()) throw hh::ParameterError("--n-list is empty");
  const std::size_t top = *std::max_element(a.n_list.begin(), a.n_list.end());
  const hh::XSequence c = load_sequence(a.seq, 2 * top - 1);
  const hh::NormMethod method = a.method == "dense" ? hh::NormMethod::DenseEigen : hh::NormMethod::PowerIteration;
  const hh::BestConstantScan scan = hh::best_constant_scan(c, a.n_list, method);
  Result res;
  for (const hh::ScanRow& row : scan.rows)
    if (!row.converged) res.code = kNumerical;
  if (res.code == kOk && !scan.nondecreasing) res.code = kPropertyFailure;
  if (res.code == kOk && scan.classic && !scan.below_pi) res.code = kPropertyFailure;
  if (common.format == "csv") {
    std::ostringstream os;
    os << "N,norm,residual,iterations\n";
    for (const hh::ScanRow& row : scan.rows)
      os << row.n << ',' << hh::io::format_double(row.norm) << ',' << hh::io::format_double(row.residual) << ','
         << row.iterations << '\n';
    res.data = os.str();
  } else {
    json j = hh::io::to_json(scan);
    j["parameters"] = {{"sequence", source_name(a.seq)},
                       {"method", a.method},
                       {"n_list", a.n_list},
                       {"rayleigh_tol", hh::PowerIterationOptions{}.rayleigh_tol},
                       {"residual_tol", hh::PowerIterationOptions{}.residual_tol},
                       {"max_iterations", hh::PowerIterationOptions{}.max_iterations}};
    res.data = dump(j);
  }
  return res;
}

// equiv

struct EquivArgs {
  std::size_t n = 16;
  std::size_t grid = 0;
  std::string seq;
};

Result run_equiv(const EquivArgs& a, const Common& common) {
  const hh::XSequence c = load_sequence(a.seq, 2 * a.n - 1);
  const hh::EquivalenceReport rep = hh::equivalence_witness(c, a.n, a.grid);
  Result res;
  if (common.format == "csv") {
    std::ostringstream os;
    os << "N,matrix_norm,hardy_ratio,gap,witness_degree\n"
       << rep.n << ',' << hh::io::format_double(rep.matrix_norm) << ',' << hh::io::format_double(rep.hardy_ratio)
       << ',' << hh::io::format_double(rep.gap) << ',' << rep.witness_degree << '\n';
    res.data = os.str();
  } else {
    json j = hh::io::to_json(rep);
    j["parameters"] = {{"sequence", source_name(a.seq)}, {"n", a.n}, {"grid", rep.grid_size}};
    res.data = dump(j);
  }
  return res;
}

// carleson

struct CarlesonArgs {
  int depth = 12;
  int centers = 8;
  std::size_t length = 16384;
  std::size_t radial = 256;
  std::size_t angular = 256;
  std::string seq;
};

Result run_carleson(const CarlesonArgs& a, const Common& common) {
  const hh::XSequence c = load_sequence(a.seq, a.length);
  const hh::CarlesonReport rep =
      hh::carleson_constant(c, hh::dyadic_arc_family(a.depth, a.centers), a.radial, a.angular);
  const hh::BoundednessVerdict verdict = hh::carleson_bounded(rep);
  Result res;
  res.code = verdict.bounded ? kOk : kPropertyFailure;
  if (common.format == "csv") {
    std::ostringstream os;
    os << "center,length,box_integral,ratio\n";
    for (const hh::ArcRecord& rec : rep.arcs)
      os << hh::io::format_double(rec.arc.center) << ',' << hh::io::format_double(rec.arc.length) << ','
         << hh::io::format_double(rec.box_integral) << ',' << hh::io::format_double(rec.ratio) << '\n';
    res.data = os.str();
  } else {
    json j = hh::io::to_json(rep);
    j["boundedness"] = hh::io::to_json(verdict);
    j["parameters"] = {{"sequence", source_name(a.seq)}, {"length", c.size()},   {"depth", a.depth},
                       {"centers", a.centers},           {"radial", a.radial}, {"angular", a.angular}};
    res.data = dump(j);
  }
  return res;
}

// kconst

struct KconstArgs {
  double rmax = 1.0 - 1e-6;
  std::size_t samples = 4;
};

Result run_kconst(const KconstArgs& a, const Common& common) {
  const hh::KConstantEstimate k = hh::k_constant(a.rmax, a.samples);
  Result res;
  if (common.format == "csv") {
    std::ostringstream os;
    os << "grid_max,argmax,analytic_limit,evaluations\n"
       << hh::io::format_double(k.grid_max) << ',' << hh::io::format_double(k.argmax) << ','
       << hh::io::format_double(k.analytic_limit) << ',' << k.evaluations << '\n';
    res.data = os.str();
  } else {
    json j = hh::io::to_json(k);
    j["parameters"] = {{"rmax", a.rmax}, {"samples_per_interval", a.samples}};
    res.data = dump(j);
  }
  return res;
}

// factorize

struct FactorizeArgs {
  std::string poly;
  std::size_t grid = 0;
};

Result run_factorize(const FactorizeArgs& a, const Common& common) {
  const hh::AnalyticPoly f = load_polynomial(a.poly);
  const hh::RieszFactors rf = hh::riesz_factorize(f, a.grid);
  Result res;
  if (common.format == "csv") {
    std::ostringstream os;
    os << "index,g_re,g_im,h_re,h_im\n";
    const std::size_t top = std::max(rf.g.degree(), rf.h.degree());
    for (std::size_t k = 0; k <= top; ++k) {
      const hh::Complex g = k <= rf.g.degree() ? rf.g[k] : hh::Complex{};
      const hh::Complex h = k <= rf.h.degree() ? rf.h[k] : hh::Complex{};
      os << k << ',' << hh::io::format_double(g.real()) << ',' << hh::io::format_double(g.imag()) << ','
         << hh::io::format_double(h.real()) << ',' << hh::io::format_double(h.imag()) << '\n';
    }
    res.data = os.str();
  } else {
    json j = hh::io::to_json(rf);
    j["norm1"] = hh::hp_norm(f, 1);
    j["norm2"] = hh::hp_norm(f, 2);
    j["parameters"] = {{"polynomial", a.poly}, {"degree", f.degree()}, {"grid", rf.grid_size}};
    res.data = dump(j);
  }
  return res;
}

// hardy-check

struct HardyCheckArgs {
  std::string poly;
  std::string seq;
};

Result run_hardy_check(const HardyCheckArgs& a, const Common& common) {
  const hh::AnalyticPoly f = load_polynomial(a.poly);
  const hh::XSequence c = load_sequence(a.seq, 2 * f.degree() + 1);
  const double sum = hh::hardy_sum(f, c);
  const double ratio = hh::hardy_ratio(f, c);
  const hh::DegreeBoundCheck chk = hh::hardy_degree_bound_check(f, c);
  Result res;
  res.code = chk.skipped || chk.holds ? kOk : kPropertyFailure;
  if (common.format == "csv") {
    std::ostringstream os;
    os << "hardy_sum,hardy_ratio,skipped,holds,bound,slack\n"
       << hh::io::format_double(sum) << ',' << hh::io::format_double(ratio) << ',' << (chk.skipped ? 1 : 0) << ','
       << (chk.holds ? 1 : 0) << ',' << hh::io::format_double(chk.bound) << ',' << hh::io::format_double(chk.slack)
       << '\n';
    res.data = os.str();
  } else {
    res.data = dump({{"parameters",
                      {{"polynomial", a.poly},
                       {"sequence", source_name(a.seq)},
                       {"grid", hh::default_grid_size(f.degree())},
                       {"bound_factor", 1.0 + 1e-8}}},
                     {"hardy_sum", sum},
                     {"hardy_ratio", ratio},
                     {"xnorm", hh::xnorm(c)},
                     {"degree_bound", hh::io::to_json(chk)}});
  }
  return res;
}

// suite

struct SuiteArgs {
  std::uint64_t seed = hh::SuiteConfig{}.seed;
  std::size_t threads = 1;
};

Result run_suite_cmd(const SuiteArgs& a, const Common& common) {
  hh::SuiteConfig cfg;
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  const hh::SuiteReport rep = hh::run_suite(cfg);
  Result res;
  res.code = rep.pass ? kOk : kPropertyFailure;
  if (common.format == "csv") {
    std::ostringstream os;
    os << "name,cases,failures,worst_margin\n";
    for (const hh::PropertyRecord& p : rep.properties)
      os << p.name << ',' << p.cases << ',' << p.failures << ',' << hh::io::format_double(p.worst_margin) << '\n';
    res.data = os.str();
  } else {
    res.data = dump(hh::to_json(rep));
  }
  return res;
}

int emit(const Result& r, const Common& common) {
  if (common.out.empty()) {
    std::cout << r.data << std::flush;
  } else {
    std::ofstream f(common.out, std::ios::binary);
    if (!f) {
      std::cerr << "hhbench: cannot write '" << common.out << "'\n";
      return kUsage;
    }
    f << r.data;
  }
  return r.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical workbench for generalized Hardy and Hilbert inequalities", "hhbench"};
  app.require_subcommand(1);
  Common common;

  XnormArgs xa;
  auto* xnorm = app.add_subcommand("xnorm", "X-norm and prefix ratios of a sequence");
  xnorm->add_option("--seq", xa.seq, "Sequence CSV (index,value); default: classic 1/(n+1)");
  xnorm->add_option("--length", xa.length, "Length of the default classic sequence")->capture_default_str();
  add_common(xnorm, common);

  SlowDecayArgs sa;
  auto* slow = app.add_subcommand("slowdecay", "Slow-decay sequence, certificate and infinitude report");
  slow->add_option("--r", sa.r, "Ratio r in (0, 1)")->capture_default_str();
  slow->add_option("--beta", sa.beta, "Exponent beta > 1")->capture_default_str();
  slow->add_option("--n", sa.n, "Number of terms")->capture_default_str();
  slow->add_option("--s", sa.s, "Exponent s of the running maxima (default r + 0.1)");
  add_common(slow, common);

  HilbertNormArgs ha;
  auto* hnorm = app.add_subcommand("hilbert-norm", "Truncated Hankel operator norms over a list of sizes");
  hnorm->add_option("--n-list", ha.n_list, "Ascending sizes, comma separated")->delimiter(',')->capture_default_str();
  hnorm->add_option("--method", ha.method, "power or dense")
      ->check(CLI::IsMember({"power", "dense"}))
      ->capture_default_str();
  hnorm->add_option("--seq", ha.seq, "Sequence CSV; default: classic");
  add_common(hnorm, common);

  EquivArgs ea;
  auto* equiv = app.add_subcommand("equiv", "Extremal witness comparing Hardy and Hilbert constants");
  equiv->add_option("--n", ea.n, "Truncation size")->check(CLI::PositiveNumber)->capture_default_str();
  equiv->add_option("--grid", ea.grid, "Boundary grid size (0: automatic)")->capture_default_str();
  equiv->add_option("--seq", ea.seq, "Sequence CSV; default: classic");
  add_common(equiv, common);

  CarlesonArgs ca;
  auto* carleson = app.add_subcommand("carleson", "Carleson box ratios over dyadic arcs");
  carleson->add_option("--depth", ca.depth, "Deepest dyadic level")->check(CLI::Range(0, 30))->capture_default_str();
  carleson->add_option("--centers", ca.centers, "Arc centres per level")->check(CLI::Range(1, 4096))->capture_default_str();
  carleson->add_option("--length", ca.length, "Length of the default classic sequence")->capture_default_str();
  carleson->add_option("--radial", ca.radial, "Radial quadrature points")->capture_default_str();
  carleson->add_option("--angular", ca.angular, "Minimum angular FFT size")->capture_default_str();
  carleson->add_option("--seq", ca.seq, "Sequence CSV; default: classic");
  add_common(carleson, common);

  KconstArgs ka;
  auto* kconst = app.add_subcommand("kconst", "Grid maximum of the constant K");
  kconst->add_option("--rmax", ka.rmax, "Upper end of the r grid")->capture_default_str();
  kconst->add_option("--samples", ka.samples, "Samples per floor interval")->capture_default_str();
  add_common(kconst, common);

  FactorizeArgs fa;
  auto* factorize = app.add_subcommand("factorize", "Factor f = g h with ||f||_1 = ||g||_2 ||h||_2");
  factorize->add_option("--poly", fa.poly, "Polynomial CSV (index,re,im)")->required();
  factorize->add_option("--grid", fa.grid, "Initial grid size (0: automatic)")->capture_default_str();
  add_common(factorize, common);

  HardyCheckArgs hca;
  auto* hardy = app.add_subcommand("hardy-check", "Hardy sum, ratio and degree bound of a polynomial");
  hardy->add_option("--poly", hca.poly, "Polynomial CSV (index,re,im)")->required();
  hardy->add_option("--seq", hca.seq, "Sequence CSV; default: classic");
  add_common(hardy, common);

  SuiteArgs ua;
  auto* suite = app.add_subcommand("suite", "Randomized property suite");
  suite->add_option("--seed", ua.seed, "Master seed")->capture_default_str();
  suite->add_option("--threads", ua.threads, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  add_common(suite, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Result r;
    if (*xnorm) r = run_xnorm(xa, common);
    else if (*slow) r = run_slowdecay(sa, common);
    else if (*hnorm) r = run_hilbert_norm(ha, common);
    else if (*equiv) r = run_equiv(ea, common);
    else if (*carleson) r = run_carleson(ca, common);
    else if (*kconst) r = run_kconst(ka, common);
    else if (*factorize) r = run_factorize(fa, common);
    else if (*hardy) r = run_hardy_check(hca, common);
    else r = run_suite_cmd(ua, common);
    return emit(r, common);
  } catch (const hh::ConvergenceError& e) {
    std::cerr << "hhbench: " << e.what() << " (residual " << e.residual() << ")\n";
    return kNumerical;
  } catch (const hh::FactorizationSingular& e) {
    std::cerr << "hhbench: " << e.what() << "\n";
    return kNumerical;
  } catch (const hh::Error& e) {
    std::cerr << "hhbench: " << e.what() << "\n";
    return kUsage;
  }
}

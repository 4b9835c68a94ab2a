#ifndef HARDYHILBERT_HARNESS_HPP
#define HARDYHILBERT_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardyhilbert/hardyspace.hpp"
#include "hardyhilbert/seqspace.hpp"

namespace hh {

/// Random stream of one test case, derived from (seed, property, case) only,
/// so that scheduling cannot change what a case sees.
class CaseRng {
public:
  CaseRng(std::uint64_t seed, std::uint64_t property, std::uint64_t case_index);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::size_t integer(std::size_t lo, std::size_t hi);
  /// Uniform point of the closed disk of the given radius.
  Complex in_disk(double radius = 1.0);

private:
  std::mt19937_64 engine_;
};

/// Classic, slow-decay with random (r, beta), or random nonnegative with a
/// random power decay normalized to unit X-norm; c_0 > 0 in every case.
XSequence sample_xsequence(CaseRng& rng, std::size_t n);

/// Coefficients uniform in the unit disk. When `factorizable`, polynomials
/// with a root within `min_root_distance` of the circle are rejected; after
/// 64 rejections the degree is lowered by one.
AnalyticPoly sample_polynomial(CaseRng& rng, std::size_t degree, bool factorizable,
                               double min_root_distance = 0.05);

/// Polynomial with prescribed random roots, each in 0 <= |z| <= 1 - dist or
/// 1 + dist <= |z| <= 3, and leading coefficient uniform in the unit disk
/// (rescaled so that ||f||_2 = 1).
AnalyticPoly sample_polynomial_from_roots(CaseRng& rng, std::size_t degree,
                                          double min_root_distance = 0.05);

/// Smallest distance from a root of f to the unit circle (infinity for constants).
double root_distance_to_circle(const AnalyticPoly& f);

struct SuiteConfig {
  std::uint64_t seed = 20240601;
  /// Per-property case counts; unlisted properties use their defaults.
  std::map<std::string, std::size_t> counts;
  std::size_t max_sequence_length = 64;
  std::size_t max_degree = 12;
  std::size_t grid = 4096;
  double identity_tol = 1e-12;
  double inequality_tol = 1e-8;
  double factor_tol = 1e-8;
  double witness_tol = 1e-6;
  double quadrature_tol = 1e-10;
  /// Worker threads; never affects the report.
  std::size_t threads = 1;
};

struct PropertyRecord {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double worst_margin = 0.0;
  std::vector<nlohmann::json> witnesses;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<PropertyRecord> properties;
  bool pass = true;
  std::string environment;
  nlohmann::json config;
};

/// Replacement implementations for fault injection.
struct SuiteHooks {
  std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&, const XSequence&)> hilbert_form;
};

/// Names of the properties run_suite executes, in report order.
std::vector<std::string> suite_property_names();

/// Runs every property. Failures are recorded, never thrown: an exception in
/// a case counts as a failure with the message as witness.
SuiteReport run_suite(const SuiteConfig& config, const SuiteHooks& hooks = {});

nlohmann::json to_json(const SuiteReport& report);

}  // namespace hh

#endif  // HARDYHILBERT_HARNESS_HPP

#ifndef HARDYHILBERT_SEQSPACE_HPP
#define HARDYHILBERT_SEQSPACE_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace hh {

/// Largest truncation length accepted by XSequence.
inline constexpr std::size_t kMaxSequenceLength = 100'000'000;

/// Finite truncation c_0..c_{N-1} of a candidate element of the weighted
/// sequence space X, normed by
///
///   ||c||^2 = sup_n  sum_{k<=n} (k+1)^2 |c_k|^2 / (n+1).
///
/// Values are stored as moduli. Weighted prefix sums are accumulated in
/// long double and cached together with the squared norm, so the norm of a
/// truncation is exact for the truncation and a lower bound for every
/// infinite extension.
class XSequence {
public:
  explicit XSequence(const Eigen::Ref<const Eigen::VectorXd>& values);
  explicit XSequence(const std::vector<double>& values);

  std::size_t size() const noexcept { return static_cast<std::size_t>(values_.size()); }
  const Eigen::VectorXd& values() const noexcept { return values_; }
  double operator[](std::size_t k) const { return values_[static_cast<Eigen::Index>(k)]; }

  /// sum_{k=0}^{n} (k+1)^2 c_k^2.
  long double weighted_prefix(std::size_t n) const { return prefix_.at(n); }
  /// sum_{k=1}^{n} k^2 c_k^2, the unshifted weighting used by the slow-decay
  /// construction. Computed on demand.
  long double unshifted_prefix(std::size_t n) const;

  double xnorm_sq() const noexcept { return static_cast<double>(xnorm_sq_); }

  XSequence scaled(double lambda) const;
  XSequence extended(const Eigen::Ref<const Eigen::VectorXd>& tail) const;
  XSequence head(std::size_t n) const;

private:
  void rebuild();

  Eigen::VectorXd values_;
  std::vector<long double> prefix_;
  long double xnorm_sq_ = 0.0L;
};

double xnorm(const XSequence& c);
Eigen::VectorXd prefix_ratios(const XSequence& c);
XSequence classic_sequence(std::size_t n);

enum class DecayChoice { Power, Harmonic };

/// Output of the inductive slow-decay construction. Indices are 1-based in
/// the construction; `values[i]` holds c_{i+1}.
struct SlowDecayTrace {
  double r = 0.5;
  double beta = 2.0;
  std::vector<double> values;
  std::vector<DecayChoice> choice;
  /// beta*m - sum_{k=1}^{m} k^2 c_k^2, for m = 1..N.
  std::vector<double> bound_margins;

  std::size_t size() const noexcept { return values.size(); }

  /// Export as an XSequence c_0..c_N with c_0 := c_1 = 1.
  XSequence to_xsequence() const;
};

/// Contribution k^2 c^2 of one term to the unshifted weighted sum. The
/// generator and the verifier both go through this so that their sums agree
/// bit for bit.
inline long double unshifted_term(std::size_t k, double c) {
  const long double kk = static_cast<long double>(k);
  const long double cc = static_cast<long double>(c);
  return kk * kk * cc * cc;
}

/// Builds c_1..c_N: c_1 = 1, then c_{n+1} = (n+1)^{-r} whenever that keeps
/// sum_{k<=n+1} k^2 c_k^2 <= beta (n+1), otherwise c_{n+1} = 1/(n+1).
/// Ties go to the power branch. Requires 1/2 <= r <= 1 and beta > 1.
SlowDecayTrace slow_decay_sequence(double r, double beta, std::size_t n);

struct DecayCertificate {
  bool holds = true;
  double worst_margin = 0.0;
  std::size_t worst_index = 1;  // 1-based m
};

/// Checks sum_{k=1}^{m} k^2 c_k^2 <= m beta for all m, recomputing the sums
/// from `t.values` (the stored margins are not trusted).
DecayCertificate verify_decay_bound(const SlowDecayTrace& t);

struct DecadeRecord {
  std::size_t limit = 0;          // n <= limit
  std::size_t power_count = 0;    // cumulative
  bool has_power = false;         // a power index in (previous limit, limit]
  double running_max = 0.0;       // max_{n<=limit} n^s c_n
};

struct InfinitudeReport {
  double s = 1.0;
  std::size_t power_count = 0;
  std::vector<std::size_t> power_positions;
  std::size_t largest_power_index = 0;
  std::vector<DecadeRecord> decades;
  /// True when a power index beyond n = 1 exists and the running maximum
  /// strictly increases across every later decade holding a power index.
  bool growing = false;
  /// The recurrence argument needs 2 - 2r < 1.
  bool claim_applies = false;
};

InfinitudeReport infinitude_report(const SlowDecayTrace& t, double s);

}  // namespace hh

#endif  // HARDYHILBERT_SEQSPACE_HPP

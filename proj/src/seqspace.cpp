#include "hardyhilbert/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardyhilbert/errors.hpp"

namespace hh {

XSequence::XSequence(const Eigen::Ref<const Eigen::VectorXd>& values)
    : values_(values.cwiseAbs()) {
  rebuild();
}

XSequence::XSequence(const std::vector<double>& values)
    : XSequence(Eigen::Map<const Eigen::VectorXd>(values.data(),
                                                  static_cast<Eigen::Index>(values.size()))) {}

void XSequence::rebuild() {
  const auto n = static_cast<std::size_t>(values_.size());
  if (n == 0) throw DomainError("XSequence: empty sequence");
  if (n > kMaxSequenceLength)
    throw ParameterError("XSequence: length " + std::to_string(n) + " exceeds cap");
  prefix_.resize(n);
  long double acc = 0.0L;
  xnorm_sq_ = 0.0L;
  for (std::size_t k = 0; k < n; ++k) {
    const long double w = static_cast<long double>(k + 1);
    const long double c = values_[static_cast<Eigen::Index>(k)];
    acc += w * w * c * c;
    prefix_[k] = acc;
    xnorm_sq_ = std::max(xnorm_sq_, acc / w);
  }
}

long double XSequence::unshifted_prefix(std::size_t n) const {
  if (n >= size()) throw DomainError("unshifted_prefix: index out of range");
  long double acc = 0.0L;
  for (std::size_t k = 1; k <= n; ++k) acc += unshifted_term(k, (*this)[k]);
  return acc;
}

XSequence XSequence::scaled(double lambda) const { return XSequence(values_ * lambda); }

XSequence XSequence::extended(const Eigen::Ref<const Eigen::VectorXd>& tail) const {
  Eigen::VectorXd all(values_.size() + tail.size());
  all << values_, tail;
  return XSequence(all);
}

XSequence XSequence::head(std::size_t n) const {
  if (n == 0 || n > size()) throw DomainError("XSequence::head: bad length");
  return XSequence(values_.head(static_cast<Eigen::Index>(n)));
}

double xnorm(const XSequence& c) { return std::sqrt(static_cast<double>(c.xnorm_sq())); }

Eigen::VectorXd prefix_ratios(const XSequence& c) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(c.size()));
  for (std::size_t n = 0; n < c.size(); ++n)
    out[static_cast<Eigen::Index>(n)] =
        static_cast<double>(c.weighted_prefix(n) / static_cast<long double>(n + 1));
  return out;
}

XSequence classic_sequence(std::size_t n) {
  if (n == 0) throw DomainError("classic_sequence: N must be positive");
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < v.size(); ++k) v[k] = 1.0 / static_cast<double>(k + 1);
  return XSequence(v);
}

XSequence SlowDecayTrace::to_xsequence() const {
  if (values.empty()) throw DomainError("SlowDecayTrace: empty trace");
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size() + 1));
  v[0] = values.front();
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Eigen::Index>(i + 1)] = values[i];
  return XSequence(v);
}

SlowDecayTrace slow_decay_sequence(double r, double beta, std::size_t n) {
  if (!(r >= 0.5 && r <= 1.0)) throw ParameterError("slow_decay_sequence: r must lie in [1/2, 1]");
  if (!(beta > 1.0)) throw ParameterError("slow_decay_sequence: beta must exceed 1");
  if (n == 0) throw ParameterError("slow_decay_sequence: N must be positive");
  if (n > kMaxSequenceLength) throw ParameterError("slow_decay_sequence: N exceeds cap");

  SlowDecayTrace t;
  t.r = r;
  t.beta = beta;
  t.values.reserve(n);
  t.choice.reserve(n);
  t.bound_margins.reserve(n);

  const long double b = beta;
  long double sum = unshifted_term(1, 1.0);
  t.values.push_back(1.0);
  t.choice.push_back(DecayChoice::Power);
  t.bound_margins.push_back(static_cast<double>(b - sum));

  for (std::size_t m = 2; m <= n; ++m) {
    const double md = static_cast<double>(m);
    const double power = std::pow(md, -r);
    const long double bound = b * static_cast<long double>(m);
    const long double trial = sum + unshifted_term(m, power);
    if (trial <= bound) {
      sum = trial;
      t.values.push_back(power);
      t.choice.push_back(DecayChoice::Power);
    } else {
      const double harmonic = 1.0 / md;
      sum += unshifted_term(m, harmonic);
      t.values.push_back(harmonic);
      t.choice.push_back(DecayChoice::Harmonic);
    }
    t.bound_margins.push_back(static_cast<double>(bound - sum));
  }
  return t;
}

DecayCertificate verify_decay_bound(const SlowDecayTrace& t) {
  DecayCertificate cert;
  const long double b = t.beta;
  long double sum = 0.0L;
  bool first = true;
  for (std::size_t m = 1; m <= t.values.size(); ++m) {
    sum += unshifted_term(m, t.values[m - 1]);
    const long double margin = b * static_cast<long double>(m) - sum;
    if (first || margin < cert.worst_margin) {
      cert.worst_margin = static_cast<double>(margin);
      cert.worst_index = m;
      first = false;
    }
    if (margin < 0.0L) cert.holds = false;
  }
  return cert;
}

InfinitudeReport infinitude_report(const SlowDecayTrace& t, double s) {
  if (!(s > t.r)) throw ParameterError("infinitude_report: requires s > r");
  if (t.values.size() != t.choice.size()) throw DomainError("infinitude_report: malformed trace");

  InfinitudeReport rep;
  rep.s = s;
  rep.claim_applies = t.r > 0.5;

  const std::size_t n_total = t.values.size();
  std::size_t limit = 10;
  double running = 0.0;
  std::size_t count = 0;
  bool decade_has_power = false;
  bool increasing = true;
  double prev_max = -1.0;

  for (std::size_t n = 1; n <= n_total; ++n) {
    const double v = std::pow(static_cast<double>(n), s) * t.values[n - 1];
    running = std::max(running, v);
    if (t.choice[n - 1] == DecayChoice::Power) {
      ++count;
      rep.power_positions.push_back(n);
      rep.largest_power_index = n;
      decade_has_power = true;
    }
    if (n == limit || n == n_total) {
      DecadeRecord d{n, count, decade_has_power, running};
      if (!rep.decades.empty() && d.has_power && !(d.running_max > prev_max)) increasing = false;
      prev_max = running;
      rep.decades.push_back(d);
      decade_has_power = false;
      if (n == limit) limit *= 10;
    }
  }
  rep.power_count = count;
  rep.growing = increasing && rep.largest_power_index > 1;
  return rep;
}

}  // namespace hh

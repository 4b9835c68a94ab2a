#include "hardyhilbert/bmoa.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "hardyhilbert/errors.hpp"
#include "hardyhilbert/quadrature.hpp"

namespace hh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double k_value(double r, double floor_term) {
  const double q = 1.0 - std::pow(r, 2.0 * floor_term);
  const double v = r / q;
  return v * v;
}

}  // namespace

double k_function(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw ParameterError("k_function: r must lie in [0, 1)");
  return k_value(r, std::floor(1.0 / (1.0 - r)));
}

double k_constant_limit() {
  const double v = 1.0 / (1.0 - std::exp(-2.0));
  return v * v;
}

KConstantEstimate k_constant(double r_max, std::size_t samples_per_interval) {
  if (!(r_max > 0.0 && r_max < 1.0)) throw ParameterError("k_constant: r_max must lie in (0, 1)");
  if (samples_per_interval == 0) throw ParameterError("k_constant: need at least one sample per interval");

  KConstantEstimate est;
  est.analytic_limit = k_constant_limit();
  auto consider = [&est](double r, double n) {
    const double v = k_value(r, n);
    ++est.evaluations;
    if (v > est.grid_max) {
      est.grid_max = v;
      est.argmax = r;
    }
  };

  for (std::size_t n = 1;; ++n) {
    const double nd = static_cast<double>(n);
    const double lo = 1.0 - 1.0 / nd;
    if (lo > r_max) break;
    const double hi = 1.0 - 1.0 / (nd + 1.0);
    const bool last = hi > r_max;
    const double top = last ? r_max : std::nextafter(hi, 0.0);
    for (std::size_t i = 0; i < samples_per_interval; ++i) {
      const double r = lo + (top - lo) * static_cast<double>(i) / static_cast<double>(samples_per_interval);
      if (r > 0.0) consider(r, nd);
    }
    // the right edge of each constancy interval carries its maximum
    consider(top, last ? std::floor(1.0 / (1.0 - top)) : nd);
    if (last) break;
  }
  return est;
}

Arc::Arc(double c, double len) : center(std::fmod(c, kTwoPi)), length(len) {
  if (center < 0.0) center += kTwoPi;
  if (!(len > 0.0 && len <= 1.0)) throw ParameterError("Arc: normalized length must lie in (0, 1]");
}

std::vector<Arc> dyadic_arc_family(int max_depth, int centers) {
  if (max_depth < 0 || centers < 1) throw ParameterError("dyadic_arc_family: bad depth or centre count");
  std::vector<Arc> out;
  for (int j = 0; j <= max_depth; ++j)
    for (int i = 0; i < centers; ++i)
      out.emplace_back(kTwoPi * i / centers, std::ldexp(1.0, -j));
  return out;
}

std::vector<double> carleson_box_integrals(const AnalyticPoly& g, double length,
                                           std::span<const double> centers,
                                           std::size_t radial_points,
                                           std::size_t angular_points) {
  if (radial_points < 16 || angular_points < 16)
    throw ParameterError("carleson_box_integral: resolutions must be at least 16");
  if (!(length > 0.0 && length <= 1.0))
    throw ParameterError("carleson_box_integral: normalized length must lie in (0, 1]");

  std::vector<double> out(centers.size(), 0.0);
  const AnalyticPoly dg = g.derivative();
  if (dg.is_zero()) return out;

  const auto terms = static_cast<Eigen::Index>(dg.degree() + 1);
  const std::size_t m = next_pow2(std::max<std::size_t>(angular_points, 2 * static_cast<std::size_t>(terms)));
  const bool full = length == 1.0;
  const double width = kTwoPi * length;

  // int_I e^{i k theta} dtheta for k = 1..terms-1, per arc
  std::vector<Eigen::VectorXcd> moments;
  if (!full) {
    moments.reserve(centers.size());
    for (double c : centers) {
      const double a = c - 0.5 * width;
      const double b = c + 0.5 * width;
      Eigen::VectorXcd e(terms);
      e[0] = 0.0;
      for (Eigen::Index k = 1; k < terms; ++k) {
        const double kd = static_cast<double>(k);
        e[k] = (std::polar(1.0, kd * b) - std::polar(1.0, kd * a)) / Complex(0.0, kd);
      }
      moments.push_back(std::move(e));
    }
  }

  const QuadratureRule rule = graded_toward_right(std::max(0.0, 1.0 - length), 1.0, radial_points);
  for (Eigen::Index q = 0; q < rule.nodes.size(); ++q) {
    const double r = rule.nodes[q];
    const Eigen::VectorXcd vals = evaluate_on_circle(dg.coeffs(), m, r);
    const Eigen::VectorXcd sq = vals.cwiseAbs2().cast<Complex>();
    const Eigen::VectorXcd p = circle_coefficients(sq);
    const double radial = rule.weights[q] * (1.0 - r * r) * r;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      double angular = p[0].real() * width;
      if (!full) {
        // |g'|^2 is real, so p_{-k} = conj(p_k)
        const Complex s = (p.segment(1, terms - 1).array() * moments[i].tail(terms - 1).array()).sum();
        angular += 2.0 * s.real();
      }
      out[i] += radial * angular;
    }
  }
  return out;
}

double carleson_box_integral(const AnalyticPoly& g, const Arc& arc, std::size_t radial_points,
                             std::size_t angular_points) {
  const double c[1] = {arc.center};
  return carleson_box_integrals(g, arc.length, c, radial_points, angular_points).front();
}

CarlesonReport carleson_constant(const XSequence& c, const std::vector<Arc>& arc_family,
                                 std::size_t radial_points, std::size_t angular_points) {
  if (arc_family.empty()) throw ParameterError("carleson_constant: empty arc family");
  const AnalyticPoly g(Eigen::VectorXd(c.values()));

  std::map<double, std::vector<std::size_t>> by_length;
  for (std::size_t i = 0; i < arc_family.size(); ++i) by_length[arc_family[i].length].push_back(i);

  CarlesonReport rep;
  rep.arcs.resize(arc_family.size());
  for (const auto& [length, idx] : by_length) {
    std::vector<double> centers;
    for (std::size_t i : idx) centers.push_back(arc_family[i].center);
    const std::vector<double> vals =
        carleson_box_integrals(g, length, centers, radial_points, angular_points);
    for (std::size_t k = 0; k < idx.size(); ++k)
      rep.arcs[idx[k]] = {arc_family[idx[k]], vals[k], vals[k] / length};
  }
  for (const ArcRecord& a : rep.arcs) rep.sup_ratio = std::max(rep.sup_ratio, a.ratio);
  rep.xnorm_sq = c.xnorm_sq();
  rep.k_constant = k_constant_limit();
  rep.bound_2k = 2.0 * rep.k_constant * rep.xnorm_sq;
  rep.pass = rep.sup_ratio <= rep.bound_2k;
  rep.eta_estimate = std::sqrt(rep.sup_ratio);
  rep.radial_points = radial_points;
  rep.angular_points = angular_points;
  return rep;
}

BoundednessVerdict carleson_bounded(const CarlesonReport& report) {
  std::map<int, double> per_depth;
  for (const ArcRecord& a : report.arcs) {
    const int j = static_cast<int>(std::lround(-std::log2(a.arc.length)));
    auto [it, inserted] = per_depth.try_emplace(j, a.ratio);
    if (!inserted) it->second = std::max(it->second, a.ratio);
  }
  BoundednessVerdict v;
  for (const auto& [j, mx] : per_depth) {
    v.depths.push_back(j);
    v.depth_max.push_back(mx);
  }
  double running = 0.0;
  for (std::size_t i = 0; i < v.depths.size(); ++i) {
    running = std::max(running, v.depth_max[i]);
    const int j = v.depths[i];
    if (j < 4) continue;
    const auto ahead = per_depth.find(j + 2);
    if (ahead != per_depth.end() && ahead->second > 1.5 * running) {
      v.bounded = false;
      if (v.first_violation < 0) v.first_violation = j;
    }
  }
  return v;
}

double bmo_seminorm(const AnalyticPoly& g, int dyadic_depth, std::size_t m) {
  if (dyadic_depth < 0) throw ParameterError("bmo_seminorm: negative depth");
  if (m < 4 * (g.degree() + 1)) throw ParameterError("bmo_seminorm: grid size must be at least 4(d+1)");
  if (static_cast<double>(m) * std::ldexp(1.0, -dyadic_depth) < 8.0)
    throw ResolutionError("bmo_seminorm: deepest arcs hold fewer than 8 grid points");

  const Eigen::VectorXcd s = evaluate_on_circle(g.coeffs(), m);
  const auto n = static_cast<std::size_t>(s.size());
  double sup = 0.0;
  for (int j = 0; j <= dyadic_depth; ++j) {
    const auto w = static_cast<std::size_t>(std::llround(static_cast<double>(m) * std::ldexp(1.0, -j)));
    const std::size_t stride = std::max<std::size_t>(1, w / 16);
    for (std::size_t start = 0; start < n; start += stride) {
      Complex mean{};
      for (std::size_t k = 0; k < w; ++k) mean += s[static_cast<Eigen::Index>((start + k) % n)];
      mean /= static_cast<double>(w);
      double osc = 0.0;
      for (std::size_t k = 0; k < w; ++k) osc += std::abs(s[static_cast<Eigen::Index>((start + k) % n)] - mean);
      sup = std::max(sup, osc / static_cast<double>(w));
    }
  }
  return sup;
}

}  // namespace hh

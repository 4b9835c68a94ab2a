#ifndef HARDYHILBERT_BMOA_HPP
#define HARDYHILBERT_BMOA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hardyhilbert/hardyspace.hpp"
#include "hardyhilbert/seqspace.hpp"

namespace hh {

/// (r / (1 - r^{2 floor(1/(1-r))}))^2 for 0 <= r < 1.
double k_function(double r);

/// (1 - e^{-2})^{-2}, the supremum of k_function as r -> 1.
double k_constant_limit();

struct KConstantEstimate {
  double grid_max = 0.0;
  double argmax = 0.0;
  double analytic_limit = 0.0;
  std::size_t evaluations = 0;
};

/// Maximum of k_function over (0, r_max]. The floor term is constant on
/// [1 - 1/n, 1 - 1/(n+1)) and the function increases there, so every such
/// interval is sampled at `samples_per_interval` equispaced points plus the
/// last double before its right endpoint.
KConstantEstimate k_constant(double r_max, std::size_t samples_per_interval = 4);

/// Subarc I of the circle: centre angle and normalized length |I| in (0, 1].
struct Arc {
  double center = 0.0;
  double length = 1.0;

  Arc() = default;
  Arc(double center, double length);
};

/// Dyadic lengths 2^{-j}, j = 0..max_depth, with `centers` equispaced centres each.
std::vector<Arc> dyadic_arc_family(int max_depth, int centers = 8);

/// Integral of (1 - r^2) |g'(r e^{i theta})|^2 r dr dtheta over the
/// Carleson box {theta in I, 1 - |I| <= r < 1}.
///
/// Radially: composite Gauss-Legendre on panels halving toward r = 1. In
/// angle the integral is exact: on each circle |g'|^2 is a trigonometric
/// polynomial whose coefficients come from an FFT of at least
/// `angular_points` (and at least 2 deg g) samples, and each coefficient is
/// integrated over I in closed form. Both resolutions must be >= 16.
double carleson_box_integral(const AnalyticPoly& g, const Arc& arc,
                             std::size_t radial_points = 256,
                             std::size_t angular_points = 256);

/// Box integrals for arcs sharing one length; the radial loop is shared.
std::vector<double> carleson_box_integrals(const AnalyticPoly& g, double length,
                                           std::span<const double> centers,
                                           std::size_t radial_points = 256,
                                           std::size_t angular_points = 256);

struct ArcRecord {
  Arc arc;
  double box_integral = 0.0;
  double ratio = 0.0;  // box_integral / |I|
};

struct CarlesonReport {
  std::vector<ArcRecord> arcs;
  double sup_ratio = 0.0;
  double xnorm_sq = 0.0;
  double k_constant = 0.0;
  double bound_2k = 0.0;  // 2 K ||c||^2
  bool pass = true;        // sup_ratio <= bound_2k
  double eta_estimate = 0.0;
  std::size_t radial_points = 0;
  std::size_t angular_points = 0;
};

/// Carleson ratios of g(z) = sum c_n z^n over an arc family.
CarlesonReport carleson_constant(const XSequence& c, const std::vector<Arc>& arc_family,
                                 std::size_t radial_points = 256,
                                 std::size_t angular_points = 256);

struct BoundednessVerdict {
  std::vector<int> depths;
  std::vector<double> depth_max;  // max ratio at each depth
  bool bounded = true;
  /// First depth j with max(j+2) > 1.5 max(<= j), or -1.
  int first_violation = -1;
};

/// Uniform-boundedness surrogate: for j >= 4, the maximum ratio at depth
/// j + 2 stays within 1.5 times the maximum over depths <= j.
BoundednessVerdict carleson_bounded(const CarlesonReport& report);

/// sup over arcs of (1/|I|) int_I |g - mean_I g|, for arcs of length 2^{-j},
/// j = 0..depth, at every start position on a stride of |I|/16 (at least one
/// grid step). Averages are Riemann sums on the M-point boundary grid.
/// Throws ResolutionError when the deepest arcs hold fewer than 8 points.
double bmo_seminorm(const AnalyticPoly& g, int dyadic_depth, std::size_t m);

}  // namespace hh

#endif  // HARDYHILBERT_BMOA_HPP

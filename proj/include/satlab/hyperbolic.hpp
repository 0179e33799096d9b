#pragma once

#include <utility>
#include <vector>

#include "satlab/types.hpp"

namespace satlab {

// Distance in the right half-plane { Re z > 0 } with the curvature -1 metric
// |dz| / Re z. Stable at small separations: d = 2 asinh(|z-w| / (2 sqrt(Re z Re w))).
double dist_hr(Complex z, Complex w);

// Extremal quasiconformal stretch between the marked tori spanned by
// (L1, -2pi i) and (L2, -2pi i): the affine map fixing -2pi i with A(L1) = L2.
struct AffineStretch {
  Complex a{};   // z coefficient
  Complex b{};   // conj(z) coefficient
  Complex mu{};  // Beltrami coefficient b/a
  double K = 1.0;
};

AffineStretch affine_stretch(Complex L1, Complex L2);

// log K of the extremal stretch, computed through the Beltrami coefficient;
// agrees with dist_hr(L1, L2) exactly in theory, to roundoff in practice.
double log_stretch_factor(Complex L1, Complex L2);

// Imaginary-axis height (as a multiple of 2pi) of the upper endpoint of the
// geodesic through L1, L2 with Im L1 != Im L2.
double geodesic_upper_endpoint(Complex L1, Complex L2);

// Signed fraction in lowest terms, den >= 1.
struct Fraction {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Continued-fraction convergents of y, depth-capped. With drop_leading, the
// a0/1 entry is dropped when frac(y) > 1/2 (the second convergent is already
// closer); internal ladders keep it.
std::vector<Fraction> convergents_of(double y, int max_depth = 40,
                                     bool drop_leading = true);

// For coprime (u, v), v >= 1: the pair (m, n) with n u - v m = 1 and 1 <= n <= v.
std::pair<long long, long long> bezout_pair(long long u, long long v);

// Integer Moebius action z -> -2pi i (n z - 2pi i m) / (v z - 2pi i u) on the
// half-plane; conjugate of tau -> (n tau + m)/(v tau + u) under tau = z / (-2pi i).
struct LatticeMobius {
  long long n = 1, m = 0, v = 0, u = 1;
  Complex apply(Complex z) const;
  long long det() const { return n * u - m * v; }
};

// Andrew monotone chain; returns hull vertices in counterclockwise order.
// Max pairwise (hyperbolic or Euclidean) distances are attained on the hull
// because hyperbolic balls of H_r are Euclidean disks.
std::vector<Complex> convex_hull(std::vector<Complex> points);

double max_pairwise_euclid(const std::vector<Complex>& points);
double max_pairwise_dist_hr(const std::vector<Complex>& points);

}  // namespace satlab

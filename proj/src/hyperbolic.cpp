#include "satlab/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

namespace satlab {

double dist_hr(Complex z, Complex w) {
  if (z.real() <= 0.0 || w.real() <= 0.0)
    throw OutOfDomain("dist_hr needs points with positive real part");
  const double s = std::abs(z - w) / (2.0 * std::sqrt(z.real() * w.real()));
  return 2.0 * std::asinh(s);
}

AffineStretch affine_stretch(Complex L1, Complex L2) {
  if (L1.real() <= 0.0 || L2.real() <= 0.0)
    throw OutOfDomain("stretch endpoints must lie in the right half-plane");
  AffineStretch out;
  out.b = (L2 - L1) / (2.0 * L1.real());
  out.a = 1.0 + out.b;
  out.mu = out.b / out.a;
  const double am = std::abs(out.mu);
  if (am >= 1.0) throw OutOfDomain("stretch is orientation-reversing");
  out.K = (1.0 + am) / (1.0 - am);
  return out;
}

double log_stretch_factor(Complex L1, Complex L2) {
  if (L1.real() <= 0.0 || L2.real() <= 0.0)
    throw OutOfDomain("stretch endpoints must lie in the right half-plane");
  // mu = b/(1+b) = (L2 - L1)/(L2 + conj L1); log K = 2 artanh |mu|.
  const double am = std::abs(L2 - L1) / std::abs(L2 + std::conj(L1));
  return 2.0 * std::atanh(am);
}

double geodesic_upper_endpoint(Complex L1, Complex L2) {
  const double dy = L1.imag() - L2.imag();
  if (dy == 0.0) throw OutOfDomain("geodesic endpoint needs distinct imaginary parts");
  const double c = (std::norm(L1) - std::norm(L2)) / (2.0 * dy);
  const double radius = std::abs(L1 - Complex(0.0, c));
  return (c + radius) / kTwoPi;
}

std::vector<Fraction> convergents_of(double y, int max_depth, bool drop_leading) {
  std::vector<Fraction> out;
  // h_k = a_k h_{k-1} + h_{k-2}, same for the denominators.
  long long h_prev = 1, h_prev2 = 0;
  long long k_prev = 0, k_prev2 = 1;
  double x = y;
  for (int depth = 0; depth < max_depth; ++depth) {
    const double fl = std::floor(x);
    if (fl > 9.0e17 || fl < -9.0e17) break;
    const long long a = static_cast<long long>(fl);
    const long long h = a * h_prev + h_prev2;
    const long long k = a * k_prev + k_prev2;
    if (k < 0 || k > (1LL << 60)) break;
    out.push_back({h, k});
    const double frac = x - fl;
    if (std::abs(y - static_cast<double>(h) / static_cast<double>(k)) <
        1e-15 * std::max(1.0, std::abs(y)))
      break;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  if (drop_leading && out.size() > 1 && y - std::floor(y) > 0.5) out.erase(out.begin());
  return out;
}

std::pair<long long, long long> bezout_pair(long long u, long long v) {
  if (v < 1) throw OutOfDomain("bezout_pair needs a positive denominator");
  if (v == 1) return {u - 1, 1};
  // Extended Euclid for n = u^{-1} mod v, normalized to 1 <= n <= v.
  long long r0 = ((u % v) + v) % v, r1 = v;
  long long s0 = 1, s1 = 0;
  while (r1 != 0) {
    const long long qq = r0 / r1;
    r0 -= qq * r1;
    std::swap(r0, r1);
    s0 -= qq * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw OutOfDomain("bezout_pair needs coprime arguments");
  long long n = ((s0 % v) + v) % v;
  if (n == 0) n = v;
  const long long m = (n * u - 1) / v;
  return {m, n};
}

Complex LatticeMobius::apply(Complex z) const {
  const Complex i2pi(0.0, kTwoPi);
  const Complex den = static_cast<double>(v) * z - i2pi * static_cast<double>(u);
  if (std::abs(den) == 0.0) throw OutOfDomain("Moebius image at infinity");
  return -i2pi * (static_cast<double>(n) * z - i2pi * static_cast<double>(m)) / den;
}

std::vector<Complex> convex_hull(std::vector<Complex> pts) {
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  auto cross = [](Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
  };
  std::vector<Complex> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double max_pairwise_euclid(const std::vector<Complex>& points) {
  const std::vector<Complex> hull = convex_hull(points);
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j)
      best = std::max(best, std::abs(hull[i] - hull[j]));
  return best;
}

double max_pairwise_dist_hr(const std::vector<Complex>& points) {
  const std::vector<Complex> hull = convex_hull(points);
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j)
      best = std::max(best, dist_hr(hull[i], hull[j]));
  return best;
}

}  // namespace satlab

#include "satlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>

#include "satlab/dynamics.hpp"
#include "satlab/hyperbolic.hpp"
#include "satlab/parallel.hpp"

namespace satlab {

namespace {

// Number of fixed points of P_lambda^q inside C(0, r), by the argument
// principle. Non-integer counts (fixed point too close to the contour) and
// quadrature failures are reported as nullopt so the caller can move down
// the radius ladder.
std::optional<int> enclosed_fixed_points(Complex lambda, int q, double r) {
  const auto integrand = [lambda, q](Complex w) -> Complex {
    Complex value = w, deriv = 1.0;
    for (int k = 0; k < q; ++k) {
      deriv *= logistic_deriv(lambda, value);
      value = logistic(lambda, value);
    }
    const Complex denom = value - w;
    if (std::abs(denom) < 1e-14) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      return {nan, nan};
    }
    return (deriv - 1.0) / denom;
  };
  Complex count;
  try {
    count = contour_integral(integrand, 0.0, r, 1e-9);
  } catch (const NumericalError&) {
    return std::nullopt;
  }
  const double rounded = std::round(count.real());
  if (std::abs(count.real() - rounded) > 1e-6 || std::abs(count.imag()) > 1e-6)
    return std::nullopt;
  return static_cast<int>(rounded);
}

// (P^q)' must stay inside D(1, 1) on the contour for the principal logarithm
// in the circulation integrand to vary continuously.
bool derivative_in_unit_disk(Complex lambda, int q, double r) {
  const int samples = 256;
  for (int k = 0; k < samples; ++k) {
    const double theta = kTwoPi * k / samples;
    Complex w = r * Complex(std::cos(theta), std::sin(theta));
    Complex deriv = 1.0;
    for (int j = 0; j < q; ++j) {
      deriv *= logistic_deriv(lambda, w);
      w = logistic(lambda, w);
    }
    if (std::abs(deriv - 1.0) >= 0.999) return false;
  }
  return true;
}

}  // namespace

Complex buff_h(const IrreducibleRational& pq, Complex big_lambda_value) {
  const int q = static_cast<int>(pq.q);
  const Complex lambda = pq.omega() * std::exp(big_lambda_value / static_cast<double>(q));

  // The merged cluster: the fixed point 0 plus the q-cycle born at the root.
  // At the root itself the cycle sits at 0 exactly and contributes no extra
  // containment constraint.
  std::vector<Complex> cluster{Complex(0.0, 0.0)};
  if (std::abs(big_lambda_value) > 1e-14) {
    const PeriodicOrbit orbit = cycle_at(pq, lambda);
    cluster.insert(cluster.end(), orbit.cycle.begin(), orbit.cycle.end());
  }
  double cluster_radius = 0.0;
  for (Complex z : cluster) cluster_radius = std::max(cluster_radius, std::abs(z));
  // For q = 1 the fixed point 1 - lambda is the tracked cycle itself and
  // belongs inside; for q >= 2 it must stay well outside the contour.
  const double co_fixed = q == 1 ? 1e300 : std::abs(1.0 - lambda);

  // The admissible window can be narrow: the cluster pushes the radius up
  // while the derivative condition pushes it down, so the ladder must step
  // finely (4 percent) to land inside it for |Lambda| near 0.1.
  for (int k = 0; k < 120; ++k) {
    const double r = 0.45 * std::pow(0.96, k);
    if (cluster_radius > 0.8 * r) continue;
    if (co_fixed < 1.25 * r) continue;
    if (!derivative_in_unit_disk(lambda, q, r)) continue;
    const auto count = enclosed_fixed_points(lambda, q, r);
    if (!count || *count != q + 1) continue;
    return buff_circulation(lambda, q, 0.0, r);
  }
  throw OutOfDomain("no admissible contour radius for the circulation");
}

Complex residue_contour(const IrreducibleRational& pq) {
  if (pq.q > 7)
    throw OutOfDomain("contour residue is validated for denominators up to 7");
  return buff_h(pq, 0.0);
}

ResidueFit residue_fit(const IrreducibleRational& pq,
                       const std::vector<double>& t_values) {
  std::vector<double> ts = t_values;
  if (ts.empty()) {
    for (int k = 0; k < 12; ++k) ts.push_back(std::pow(10.0, -4.0 + 2.0 * k / 11.0));
  }
  for (double t : ts) {
    if (!(t >= 1e-4 && t <= 1e-1))
      throw OutOfDomain("fit parameters must lie in [1e-4, 1e-1]");
  }
  if (ts.size() < 6)
    throw IllConditionedFit("need at least 6 parameters for the expansion fit");

  const double q = static_cast<double>(pq.q);
  std::vector<Complex> ws(ts.size()), ys(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto [lambda, big] = lambda_of_t(pq, ts[i]);
    (void)lambda;
    const Complex w = Complex(0.0, ts[i]) / q;
    ws[i] = w;
    ys[i] = -(big + w) / (w * w);
  }

  // Least squares for y = a + b w via the complex normal equations.
  const double n = static_cast<double>(ts.size());
  Complex s1 = 0.0, sy = 0.0, swy = 0.0;
  double s2 = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    s1 += ws[i];
    s2 += std::norm(ws[i]);
    sy += ys[i];
    swy += std::conj(ws[i]) * ys[i];
  }
  const double det = n * s2 - std::norm(s1);
  if (det < 1e-30) throw IllConditionedFit("degenerate normal equations");
  const Complex a = (sy * s2 - s1 * swy) / det;
  const Complex b = (n * swy - std::conj(s1) * sy) / det;

  double sq = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) sq += std::norm(ys[i] - a - b * ws[i]);
  return {a, std::sqrt(sq / n)};
}

std::pair<Complex, Complex> lambda_of_t(const IrreducibleRational& pq, double t) {
  if (!(std::abs(t) > 0.0 && std::abs(t) <= kPi / 4.0))
    throw OutOfDomain("boundary parameter t must satisfy 0 < |t| <= pi/4");
  const Complex rho = std::polar(1.0, t);
  const MultiplierSolution sol = invert_multiplier(pq, rho);
  return {sol.lambda, big_lambda(pq, sol.lambda)};
}

std::vector<DivergenceRow> divergence_scan(const IrreducibleRational& pq,
                                           const IrreducibleRational& PQ,
                                           const std::vector<double>& t_grid) {
  if (pq.q == PQ.q)
    throw OutOfDomain("divergence scan needs limbs with different denominators");
  if (t_grid.empty()) throw OutOfDomain("empty parameter grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0 && t_grid[i] <= kPi / 4.0))
      throw OutOfDomain("grid values must satisfy 0 < t <= pi/4");
    if (i > 0 && t_grid[i] >= t_grid[i - 1])
      throw OutOfDomain("grid values must be strictly decreasing");
  }

  const double gap = std::abs(static_cast<double>(PQ.q) - static_cast<double>(pq.q));
  std::vector<DivergenceRow> rows(t_grid.size());
  std::vector<std::string> failures(t_grid.size());
  for_range(t_grid.size(), [&](std::size_t i) {
    try {
      const double t = t_grid[i];
      const auto [l1, big1] = lambda_of_t(pq, t);
      const auto [l2, big2] = lambda_of_t(PQ, t);
      (void)l1;
      (void)l2;
      rows[i] = {t, big1, big2, dist_hr(big1, big2), 2.0 * std::log(gap / t)};
    } catch (const NumericalError& err) {
      failures[i] = err.what();
    }
  });
  for (const std::string& message : failures) {
    if (!message.empty()) throw ContinuationFailure(message);
  }
  return rows;
}

std::vector<LimbRecord> small_limb_scan(const IrreducibleRational& pq, int n_lo,
                                        int n_hi, int resolution, int max_iter) {
  if (n_lo < 2 || n_hi < n_lo)
    throw OutOfDomain("sublimb survey needs 2 <= n_lo <= n_hi");
  const Complex residue = residue_contour(pq);
  const double q = static_cast<double>(pq.q);

  std::vector<LimbRecord> records;
  for (int n = n_lo; n <= n_hi; ++n) {
    const IrreducibleRational inner(static_cast<long long>(n) * n - 1,
                                    static_cast<long long>(n) * n * n);
    LimbRecord rec;
    rec.n = n;
    rec.inner = inner;
    rec.lambda_root = sublimb_root(pq, inner);
    rec.big_lambda_root = big_lambda(pq, rec.lambda_root);
    rec.re_lower_bound =
        residue.real() * 4.0 * kPi * kPi / (q * q * static_cast<double>(n) * n);
    const DiameterResult diam =
        sublimb_diameter({pq, inner}, resolution, max_iter);
    rec.euclid_diam = diam.euclid;
    rec.hyp_diam = diam.hyp;
    records.push_back(rec);
  }
  return records;
}

std::vector<CorollaryRow> corollary_check(const IrreducibleRational& pq,
                                          const IrreducibleRational& PQ,
                                          int n_lo, int n_hi) {
  if (n_lo < 2 || n_hi < n_lo)
    throw OutOfDomain("corollary check needs 2 <= n_lo <= n_hi");

  std::vector<CorollaryRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const IrreducibleRational inner(static_cast<long long>(n) * n - 1,
                                    static_cast<long long>(n) * n * n);
    const Complex big1 = big_lambda(pq, sublimb_root(pq, inner));
    const Complex big2 = big_lambda(PQ, sublimb_root(PQ, inner));
    rows.push_back({n, dist_hr(big1, big2)});
  }
  return rows;
}

}  // namespace satlab

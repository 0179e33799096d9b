#include "satlab/dynamics.hpp"

#include <cmath>
#include <limits>

#include "satlab/parallel.hpp"

namespace satlab {

namespace {

constexpr double kNewtonTol = 1e-13;
constexpr int kNewtonMaxIter = 200;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// P^n and its z-derivative by the chain rule.
void iterate_with_deriv(Complex lambda, Complex z, int n, Complex& value, Complex& deriv) {
  Complex w = z;
  Complex d = 1.0;
  for (int k = 0; k < n; ++k) {
    d *= logistic_deriv(lambda, w);
    w = logistic(lambda, w);
  }
  value = w;
  deriv = d;
}

}  // namespace

Complex iterate(Complex lambda, Complex z, int n) {
  for (int k = 0; k < n; ++k) z = logistic(lambda, z);
  return z;
}

OrbitResult iterate_critical(Complex lambda, int max_iter) {
  const double radius = 2.0 * (1.0 + std::abs(lambda));
  Complex z = critical_point(lambda);
  for (int k = 1; k <= max_iter; ++k) {
    z = logistic(lambda, z);
    if (std::abs(z) > radius) return {true, k, z};
  }
  return {false, 0, z};
}

PeriodicOrbit find_periodic_orbit(Complex lambda, int period, Complex seed,
                                  double divisor_tol) {
  Complex z = seed;
  bool converged = false;
  for (int it = 0; it < kNewtonMaxIter; ++it) {
    Complex value, deriv;
    iterate_with_deriv(lambda, z, period, value, deriv);
    const Complex residual = value - z;
    const Complex denom = deriv - 1.0;
    if (std::abs(denom) == 0.0)
      throw ContinuationFailure("degenerate Newton step for the periodic orbit");
    const Complex step = residual / denom;
    z -= step;
    if (!finite(z)) throw ContinuationFailure("periodic orbit Newton diverged");
    if (std::abs(step) < kNewtonTol * (1.0 + std::abs(z)) ||
        std::abs(residual) < kNewtonTol) {
      // One extra quadratic step to land at machine accuracy.
      if (!converged) {
        converged = true;
        continue;
      }
      break;
    }
    converged = false;
  }
  if (!converged) throw ContinuationFailure("periodic orbit Newton did not converge");

  PeriodicOrbit out;
  out.cycle.reserve(period);
  Complex w = z;
  Complex mult = 1.0;
  for (int k = 0; k < period; ++k) {
    out.cycle.push_back(w);
    mult *= logistic_deriv(lambda, w);
    w = logistic(lambda, w);
  }
  out.multiplier = mult;

  if (divisor_tol > 0.0) {
    for (int d = 1; d < period; ++d) {
      if (period % d != 0) continue;
      if (std::abs(iterate(lambda, z, d) - z) <= divisor_tol)
        throw WrongPeriod("orbit has period dividing " + std::to_string(d));
    }
  }
  return out;
}

Complex contour_integral(const std::function<Complex(Complex)>& f, Complex center,
                         double radius, double tol, int max_nodes) {
  if (radius <= 0.0) throw OutOfDomain("contour radius must be positive");
  int n = 32;
  std::vector<Complex> samples(n);
  for_range(n, [&](std::int64_t k) {
    const double theta = kTwoPi * static_cast<double>(k) / n;
    const Complex node = std::polar(1.0, theta);
    samples[k] = f(center + radius * node) * node;
  });
  Complex prev = radius * block_sum(samples) / static_cast<double>(n);

  while (n < max_nodes) {
    std::vector<Complex> refined(2 * n);
    for_range(n, [&](std::int64_t k) {
      refined[2 * k] = samples[k];
      const double theta = kTwoPi * (2.0 * static_cast<double>(k) + 1.0) / (2.0 * n);
      const Complex node = std::polar(1.0, theta);
      refined[2 * k + 1] = f(center + radius * node) * node;
    });
    samples.swap(refined);
    n *= 2;
    const Complex current = radius * block_sum(samples) / static_cast<double>(n);
    if (!finite(current))
      throw NoQuadratureConvergence("integrand evaluated non-finite on the contour");
    if (std::abs(current - prev) <= tol * std::max(1.0, std::abs(current))) return current;
    prev = current;
  }
  throw NoQuadratureConvergence("trapezoid refinement hit the node cap");
}

namespace {

FixedPointData invariants_at_radius(Complex lambda, int n, Complex z0, double radius) {
  const auto displacement = [&](Complex w) { return iterate(lambda, w, n) - w; };

  // Guard: the zero-counting integrand needs F(w) != w on the contour.
  double min_disp = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 64; ++k) {
    const Complex w = z0 + std::polar(radius, kTwoPi * k / 64.0);
    min_disp = std::min(min_disp, std::abs(displacement(w)));
  }
  if (min_disp < 1e-11 * std::max(1.0, radius))
    throw FixedPointOnContour("a fixed point lies on or near the contour");

  const Complex count = contour_integral(
      [&](Complex w) {
        Complex value, deriv;
        iterate_with_deriv(lambda, w, n, value, deriv);
        return (deriv - 1.0) / (value - w);
      },
      z0, radius);
  const double rounded = std::round(count.real());
  if (std::abs(count - Complex(rounded, 0.0)) > 1e-6 || rounded < 1.0)
    throw FixedPointOnContour("zero count of F(w) - w is not a positive integer");

  FixedPointData out;
  out.multiplicity = static_cast<int>(rounded);
  out.index = contour_integral(
      [&](Complex w) { return 1.0 / (w - iterate(lambda, w, n)); }, z0, radius);
  out.resit = Complex(out.multiplicity, 0.0) / 2.0 - out.index;
  return out;
}

}  // namespace

FixedPointData fixed_point_invariants(Complex lambda, int n, Complex z0, double radius) {
  if (radius > 0.0) return invariants_at_radius(lambda, n, z0, radius);

  // Auto radius: walk a geometric ladder down and accept once the germ data is
  // stable under one refinement (same multiplicity, matching resit).
  for (int k = 0; k < 14; ++k) {
    const double r = 0.45 * std::pow(0.72, k);
    try {
      const FixedPointData coarse = invariants_at_radius(lambda, n, z0, r);
      const FixedPointData fine = invariants_at_radius(lambda, n, z0, r * 0.72);
      if (coarse.multiplicity == fine.multiplicity &&
          std::abs(coarse.resit - fine.resit) <= 1e-9 * std::max(1.0, std::abs(fine.resit)))
        return fine;
    } catch (const NumericalError&) {
      continue;
    }
  }
  throw FixedPointOnContour("no isolating radius found for the fixed point");
}

std::pair<Complex, Complex> resit_iterate_check(Complex lambda, int n, int k) {
  const Complex base = fixed_point_invariants(lambda, n, 0.0).resit;
  const Complex iterated = fixed_point_invariants(lambda, n * k, 0.0).resit;
  return {base, static_cast<double>(k) * iterated};
}

Complex buff_circulation(Complex lambda, int n, Complex center, double radius,
                         double tol) {
  // Evaluations may run inside a parallel region, so failures surface as NaN
  // and are turned into an exception by the quadrature driver.
  return contour_integral(
      [&](Complex w) {
        Complex value, deriv;
        iterate_with_deriv(lambda, w, n, value, deriv);
        const Complex log_deriv = std::log(deriv);
        if (std::abs(log_deriv) < 1e-14) {
          const double nan = std::numeric_limits<double>::quiet_NaN();
          return Complex(nan, nan);
        }
        return (deriv - 1.0) / ((value - w) * log_deriv);
      },
      center, radius, tol);
}

namespace {

// g(lambda) = P^{q*m}(v) with v the critical value, together with the full
// lambda-derivative (v itself depends on lambda). Roots are exactly the
// parameters whose critical value reaches the fixed point 0 after q*m steps;
// landing on the co-fixed point 1 - lambda does not count.
void misiurewicz_residual(Complex lambda, int m, int q, Complex& g, Complex& dg) {
  Complex w = critical_value(lambda);
  Complex dw = -lambda / 2.0;
  for (int k = 0; k < m * q; ++k) {
    dw = w + logistic_deriv(lambda, w) * dw;
    w = logistic(lambda, w);
  }
  g = w;
  dg = dw;
}

}  // namespace

MisiurewiczPoint find_misiurewicz(const IrreducibleRational& pq, int m, Complex seed) {
  if (m < 1) throw OutOfDomain("preperiod must be at least 1");
  const int q = static_cast<int>(pq.q);
  Complex lambda = seed;
  bool converged = false;
  for (int it = 0; it < kNewtonMaxIter; ++it) {
    Complex g, dg;
    misiurewicz_residual(lambda, m, q, g, dg);
    if (std::abs(dg) == 0.0)
      throw ContinuationFailure("degenerate Newton step in the preperiodic solve");
    const Complex step = g / dg;
    lambda -= step;
    if (!finite(lambda)) throw ContinuationFailure("preperiodic Newton diverged");
    if (std::abs(step) < kNewtonTol * (1.0 + std::abs(lambda)) || std::abs(g) < kNewtonTol) {
      if (!converged) {
        converged = true;
        continue;
      }
      break;
    }
    converged = false;
  }
  if (!converged) throw ContinuationFailure("preperiodic Newton did not converge");

  for (int mp = 0; mp < m; ++mp) {
    Complex g, dg;
    misiurewicz_residual(lambda, mp, q, g, dg);
    if (std::abs(g) <= 1e-8 * (1.0 + std::abs(lambda))) throw NotMinimal(mp);
  }

  Complex g, dg;
  misiurewicz_residual(lambda, m, q, g, dg);
  return {lambda, m, std::abs(g)};
}

}  // namespace satlab

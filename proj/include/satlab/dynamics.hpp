#pragma once

#include <functional>

#include "satlab/types.hpp"

namespace satlab {

// The quadratic family P_lambda(z) = lambda z + z^2. Fixed points 0 and
// 1 - lambda with multipliers lambda and 2 - lambda; critical point -lambda/2.
inline Complex logistic(Complex lambda, Complex z) { return lambda * z + z * z; }
inline Complex logistic_deriv(Complex lambda, Complex z) { return lambda + 2.0 * z; }
inline Complex critical_point(Complex lambda) { return -lambda / 2.0; }
inline Complex critical_value(Complex lambda) { return -lambda * lambda / 4.0; }

Complex iterate(Complex lambda, Complex z, int n);

struct OrbitResult {
  bool escaped = false;
  int escape_step = 0;  // first step past the escape radius (0 when bounded)
  Complex last{};
};

// Runs the critical orbit against the escape radius 2(1 + |lambda|).
OrbitResult iterate_critical(Complex lambda, int max_iter);

inline bool is_member(Complex lambda, int max_iter) {
  return !iterate_critical(lambda, max_iter).escaped;
}

// Newton solve of P^period(z) = z from the seed. With divisor_tol > 0 the
// solution must have exact period: every proper divisor d must move the point
// by more than divisor_tol, else WrongPeriod.
PeriodicOrbit find_periodic_orbit(Complex lambda, int period, Complex seed,
                                  double divisor_tol = 1e-8);

// (1/2pi i) times the contour integral of f over the circle |w - center| = radius,
// trapezoid rule with node doubling until |I_2N - I_N| <= tol * max(1, |I_2N|).
Complex contour_integral(const std::function<Complex(Complex)>& f, Complex center,
                         double radius, double tol = 1e-10, int max_nodes = 1 << 20);

// Multiplicity, holomorphic index and residu iteratif of the fixed point z0 of
// F = P^n. radius <= 0 picks the largest radius in a geometric ladder on which
// the multiplicity count is integer and stable under one refinement.
FixedPointData fixed_point_invariants(Complex lambda, int n, Complex z0,
                                      double radius = 0.0);

// Checks the iterate identity: returns (resit of P^n at 0, k * resit of P^{nk} at 0);
// the two agree when both germs are computed at the same fixed point.
std::pair<Complex, Complex> resit_iterate_check(Complex lambda, int n, int k);

// (1/2pi i) contour of the normalized Buff form of F = P^n over |w| = radius:
// integrand (F'(w) - 1) / ((F(w) - w) Log F'(w)), principal branch.
Complex buff_circulation(Complex lambda, int n, Complex center, double radius,
                         double tol = 1e-10);

// Solves P^{m+q}(v) = P^m(v) for lambda, v the critical value, q from the angle.
// The landing preperiod must be minimal, else NotMinimal with the witness.
MisiurewiczPoint find_misiurewicz(const IrreducibleRational& pq, int m, Complex seed);

}  // namespace satlab

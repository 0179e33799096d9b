#pragma once

#include <utility>
#include <vector>

#include "satlab/parameter.hpp"
#include "satlab/types.hpp"

namespace satlab {

// Circulation H(Lambda) of the one-form (F'(w) - 1) / ((F(w) - w) Log F'(w))
// for F = P^q at lambda = omega_{p/q} exp(Lambda / q), taken over a circle
// around the merged fixed-point cluster at 0.
//
// The contour radius is chosen automatically from the ladder
// r_k = 0.45 * 0.72^k. A radius is admissible when the circle encloses
// exactly the cluster (fixed-point count q + 1 by the argument principle,
// with 0 and the continued q-cycle inside and the co-fixed point 1 - lambda
// outside) and (P^q)' stays in the disk D(1, 1) on the contour, so the
// principal branch of the logarithm is safe. Throws OutOfDomain when the
// ladder is exhausted.
Complex buff_h(const IrreducibleRational& pq, Complex big_lambda_value);

// Residual invariant of P at the root of the p/q-limb, computed as the
// circulation above at Lambda = 0. Guarded to q <= 7, where the cluster
// separates cleanly from the rest of the Julia set at contour scale.
Complex residue_contour(const IrreducibleRational& pq);

struct ResidueFit {
  Complex residue;
  double rms_residual = 0.0;
};

// Recovers the same invariant from the expansion of the multiplier map:
// for rho = e^{it} the value y(t) = -(Lambda + w) / w^2 with w = it / q
// satisfies y = residue + O(w). Fits y against [1, w] by complex least
// squares over the given parameters t (default: 12 log-spaced values in
// [1e-4, 1e-2]). Throws IllConditionedFit when fewer than 6 parameters
// survive the domain check or the normal equations degenerate.
ResidueFit residue_fit(const IrreducibleRational& pq,
                       const std::vector<double>& t_values = {});

// Parameter on the limb boundary with cycle multiplier e^{it}, together with
// its coordinate Lambda = Log(lambda^q). Requires 0 < |t| <= pi/4.
std::pair<Complex, Complex> lambda_of_t(const IrreducibleRational& pq, double t);

// Boundary points of two limbs with equal multiplier e^{it} drift apart in
// the hyperbolic metric of the right half-plane as t -> 0 whenever the limb
// denominators differ. Each row records the distance together with the
// comparison value 2 log(|Q - q| / t). The grid must be positive and
// strictly decreasing; the two denominators must differ.
std::vector<DivergenceRow> divergence_scan(const IrreducibleRational& pq,
                                           const IrreducibleRational& PQ,
                                           const std::vector<double>& t_grid);

// Survey of the sublimbs attached at interior angle (n^2 - 1) / n^3 for n in
// [n_lo, n_hi]: root parameter, its Lambda coordinate, the lower bound
// Re(residue) * 4 pi^2 / (q n)^2 for Re(Lambda) at the root, and measured
// sublimb diameters at the given raster resolution.
std::vector<LimbRecord> small_limb_scan(const IrreducibleRational& pq, int n_lo,
                                        int n_hi, int resolution = 512,
                                        int max_iter = 4096);

// Hyperbolic distances between the Lambda-coordinates of the roots of the
// (n^2 - 1) / n^3 sublimbs of two limbs. The sequence grows without bound
// when the limb denominators differ and stays bounded when they coincide;
// both cases are worth reporting, so equal denominators are allowed here.
std::vector<CorollaryRow> corollary_check(const IrreducibleRational& pq,
                                          const IrreducibleRational& PQ,
                                          int n_lo, int n_hi);

}  // namespace satlab

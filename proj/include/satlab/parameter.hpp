#pragma once

#include "satlab/types.hpp"

namespace satlab {

// Parameter of the standard quadratic family z^2 + c equivalent to P_lambda.
inline Complex c_of_lambda(Complex lambda) {
  return lambda / 2.0 - lambda * lambda / 4.0;
}

// Center of the satellite component H_{p/q} of the main disk (the parameter
// where the q-cycle passes through the critical point); 2 for the disk itself.
Complex component_center(const IrreducibleRational& pq);

// The q-cycle at lambda, tracked by continuation from the center of H_{p/q}
// (straight segment, adaptive halving, minimum relative step 1e-8).
PeriodicOrbit cycle_at(const IrreducibleRational& pq, Complex lambda);

// Multiplier of the q-cycle at lambda. Near the root the cycle merges with the
// fixed point 0 and the exact-period test is skipped (|rho - 1| <= 1e-6).
Complex multiplier_map(const IrreducibleRational& pq, Complex lambda);

// Inverse of the multiplier map: lambda with the q-cycle multiplier rho,
// by radial continuation of a 2x2 Newton solve in (z, lambda) from the center.
// rho = 1 short-circuits to the root omega_{p/q} where the cycle degenerates.
MultiplierSolution invert_multiplier(const IrreducibleRational& pq, Complex rho);

// Root of the inner-angle satellite of H_outer: the parameter where the outer
// cycle's multiplier equals exp(2pi i inner).
Complex sublimb_root(const IrreducibleRational& outer, const IrreducibleRational& inner);
MultiplierSolution sublimb_root_solution(const IrreducibleRational& outer,
                                         const IrreducibleRational& inner);

// Principal logarithm of lambda^q, the half-plane coordinate of the limb.
// BranchCut when lambda^q lands on the negative real axis, OutOfDomain when
// the result leaves Re >= -1e-12.
Complex big_lambda(const IrreducibleRational& pq, Complex lambda);

// |Lambda - log 2| <= log 2 (with 1e-12 slack).
bool yoccoz_disk_check(Complex big_lambda_value);

// Pixel-scan diameters of the inner-angle sublimb: flood fill of member pixels
// from the root, restricted to the wake side of the root multiplier. Euclidean
// diameter in lambda, hyperbolic diameter over the Lambda images with Re > 0.
DiameterResult sublimb_diameter(const SublimbId& id, int resolution, int max_iter,
                                double window_constant = 6.0);

}  // namespace satlab

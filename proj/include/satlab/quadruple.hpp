#pragma once

#include "satlab/types.hpp"

namespace satlab {

// Integer quadruple (p, q, r, s) spanning, for each torus Lambda_j, the
// quadrilateral Q(q Lambda_j - p 2pi i, s Lambda_j - r 2pi i) with a-sides
// parallel to the first vector. Normalized to q > 0, s >= 0.
struct LatticeQuadruple {
  long long p = 0, q = 1, r = 1, s = 0;
};

enum class SearchBranch {
  EqualHeight,         // Im L1 = Im L2: horizontal geodesic, convergent ladder
  RationalEndpoint,    // geodesic endpoint at rational height: one Moebius reduction
  IrrationalEndpoint,  // endpoint irrational: ladder of convergent-pair reductions
};

struct QuadrupleResult {
  LatticeQuadruple quad;
  double mod1 = 0.0;
  double mod2 = 0.0;
  double log_ratio = 0.0;  // log(mod1 / mod2)
  double dist = 0.0;       // dist_hr(L1, L2)
  SearchBranch branch = SearchBranch::EqualHeight;
};

// Searches for a quadruple whose quadrilateral moduli verify
// log(Mod Q1 / Mod Q2) >= dist_hr(L1, L2) - eps, validating each candidate
// with the finite-element modulus. Candidates follow the geodesic geometry:
// horizontal geodesics use convergents of the common height; otherwise the
// upper endpoint of the geodesic through L1, L2 is straightened by an integer
// Moebius map first. Throws SearchExhausted when the ladder is spent, which
// includes orderings where the modulus ratio has the wrong sign.
QuadrupleResult quadruple_search(Complex L1, Complex L2, double eps, int grid = 96,
                                 int depth = 40);

}  // namespace satlab

#pragma once

#include "satlab/types.hpp"

namespace satlab {

// Conformal modulus of the parallelogram Q(va, vb) = {s va + t vb : 0<=s,t<=1},
// marked so the a-sides are the two edges parallel to va: the modulus is the
// extremal length of curves joining them (height/width = |vb|/|va| for a
// rectangle; Q(1, 2i) -> 2).
//
// P1 finite elements on a grid x grid reference mesh with the pulled-back
// metric, conjugate gradients to 1e-10, Richardson extrapolation from grid and
// 2*grid. Modulus = 1 / (Dirichlet energy of the side-to-side potential).
double parallelogram_modulus(Complex va, Complex vb, int grid = 128);

}  // namespace satlab

#include "satlab/quadruple.hpp"

#include <cmath>
#include <optional>

#include "satlab/hyperbolic.hpp"
#include "satlab/modulus.hpp"

namespace satlab {

namespace {

struct Candidate {
  LatticeQuadruple quad;
  SearchBranch branch;
};

// Stage-two quadruples live in the coordinates of a Moebius-reduced pair; this
// rewrites (p', q', r', s') through tau -> (n tau + m)/(v tau + u) back to the
// original lattice. The image quadrilateral differs by a C-linear factor, so
// the two moduli agree exactly.
LatticeQuadruple compose(const LatticeQuadruple& inner, const LatticeMobius& mob) {
  LatticeQuadruple out;
  out.q = inner.q * mob.n + inner.p * mob.v;
  out.p = inner.q * mob.m + inner.p * mob.u;
  out.s = inner.s * mob.n + inner.r * mob.v;
  out.r = inner.s * mob.m + inner.r * mob.u;
  return out;
}

bool normalize(LatticeQuadruple& quad) {
  if (quad.q == 0) return false;
  if (quad.q < 0) {
    quad.q = -quad.q;
    quad.p = -quad.p;
  }
  if (quad.s < 0) {
    quad.s = -quad.s;
    quad.r = -quad.r;
  }
  if (quad.s == 0 && quad.r < 0) quad.r = -quad.r;
  return true;
}

// Candidates for two points at (numerically) equal height 2 pi y: rectangles
// and near-rectangles spanned by v_k L - u_k 2pi i and -2pi i along the
// convergents of y. Shallow entries first: they are numerically tame, and the
// validation stops at the first pass.
std::vector<LatticeQuadruple> equal_height_ladder(Complex z1, Complex z2, int depth) {
  const double y = 0.5 * (z1.imag() + z2.imag()) / kTwoPi;
  std::vector<LatticeQuadruple> out;
  for (const Fraction& f : convergents_of(y, depth, false))
    out.push_back({f.num, f.den, 1, 0});
  return out;
}

// Simplest rational strictly between lo and hi (Stern-Brocot descent).
Fraction simplest_between(double lo, double hi) {
  if (!(lo < hi)) std::swap(lo, hi);
  const double fl = std::ceil(lo);
  if (fl <= hi && fl - lo > 1e-15) {
    if (std::abs(fl) > 9.0e17) throw OutOfDomain("interval endpoint too large");
    return {static_cast<long long>(fl), 1};
  }
  const double a = std::floor(lo);
  const Fraction inner = simplest_between(1.0 / (hi - a), 1.0 / (lo - a));
  return {static_cast<long long>(a) * inner.num + inner.den, inner.num};
}

std::optional<Fraction> detect_rational(double y, int depth) {
  for (const Fraction& f : convergents_of(y, depth, false)) {
    if (f.den > 1000000) continue;
    if (std::abs(y - f.value()) <= 1e-9 / static_cast<double>(f.den)) return f;
  }
  return std::nullopt;
}

}  // namespace

QuadrupleResult quadruple_search(Complex L1, Complex L2, double eps, int grid,
                                 int depth) {
  if (L1.real() <= 0.0 || L2.real() <= 0.0)
    throw OutOfDomain("torus generators must lie in the right half-plane");
  if (eps <= 0.0) throw OutOfDomain("eps must be positive");
  const double dist = dist_hr(L1, L2);
  if (dist == 0.0) throw OutOfDomain("the points coincide");

  std::vector<Candidate> candidates;
  const double im_tol = 1e-9 * (1.0 + std::abs(L1.imag()) + std::abs(L2.imag()));
  if (std::abs(L1.imag() - L2.imag()) <= im_tol) {
    for (const LatticeQuadruple& quad : equal_height_ladder(L1, L2, depth))
      candidates.push_back({quad, SearchBranch::EqualHeight});
  } else {
    const double y = geodesic_upper_endpoint(L1, L2);
    if (const auto exact = detect_rational(y, depth)) {
      // One reduction sends the endpoint to infinity; the images share their
      // height exactly and the equal-height ladder applies to them.
      const auto [m, n] = bezout_pair(exact->num, exact->den);
      const LatticeMobius mob{n, m, exact->den, exact->num};
      const Complex i1 = mob.apply(L1), i2 = mob.apply(L2);
      if (i1.real() > 0.0 && i2.real() > 0.0) {
        for (const LatticeQuadruple& inner : equal_height_ladder(i1, i2, depth)) {
          LatticeQuadruple quad = compose(inner, mob);
          candidates.push_back({quad, SearchBranch::RationalEndpoint});
        }
      }
    } else {
      // Straighten with consecutive convergent pairs (upper one above y); the
      // images approach a horizontal ray, and the simplest rational between
      // their heights spans the near-rectangle. Deeper pairs straighten more.
      const std::vector<Fraction> convs = convergents_of(y, depth, false);
      for (std::size_t k = 0; k + 1 < convs.size(); ++k) {
        if (convs[k].value() <= y) continue;
        const LatticeMobius mob{convs[k + 1].den, convs[k + 1].num, convs[k].den,
                                convs[k].num};
        Complex i1, i2;
        try {
          i1 = mob.apply(L1);
          i2 = mob.apply(L2);
        } catch (const NumericalError&) {
          continue;
        }
        if (i1.real() <= 0.0 || i2.real() <= 0.0) continue;
        const double h1 = i1.imag() / kTwoPi, h2 = i2.imag() / kTwoPi;
        if (h1 == h2) continue;
        Fraction ab;
        try {
          ab = simplest_between(std::min(h1, h2), std::max(h1, h2));
        } catch (const NumericalError&) {
          continue;
        }
        const LatticeQuadruple inner{ab.num, ab.den, 1, 0};
        candidates.push_back({compose(inner, mob), SearchBranch::IrrationalEndpoint});
      }
    }
  }

  const Complex i2pi(0.0, kTwoPi);
  for (Candidate cand : candidates) {
    if (!normalize(cand.quad)) continue;
    const auto span_a = [&](Complex L) {
      return static_cast<double>(cand.quad.q) * L - static_cast<double>(cand.quad.p) * i2pi;
    };
    const auto span_b = [&](Complex L) {
      return static_cast<double>(cand.quad.s) * L - static_cast<double>(cand.quad.r) * i2pi;
    };
    try {
      const double mod1 = parallelogram_modulus(span_a(L1), span_b(L1), grid);
      const double mod2 = parallelogram_modulus(span_a(L2), span_b(L2), grid);
      if (mod1 <= 0.0 || mod2 <= 0.0) continue;
      const double ratio = std::log(mod1 / mod2);
      if (ratio >= dist - eps) {
        QuadrupleResult out;
        out.quad = cand.quad;
        out.mod1 = mod1;
        out.mod2 = mod2;
        out.log_ratio = ratio;
        out.dist = dist;
        out.branch = cand.branch;
        return out;
      }
    } catch (const NumericalError&) {
      continue;  // candidate too extreme for the solver; try the next rung
    }
  }
  throw SearchExhausted("no quadruple validated the modulus inequality");
}

}  // namespace satlab

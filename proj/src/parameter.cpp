#include "satlab/parameter.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <optional>

#include "satlab/dynamics.hpp"
#include "satlab/hyperbolic.hpp"
#include "satlab/parallel.hpp"

namespace satlab {

namespace {

constexpr double kNewtonTol = 1e-13;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Orbit data for one period: P^q(z), its z- and lambda-derivatives, the cycle
// multiplier D = prod(lambda + 2 z_k), and the derivatives of D. The factor
// products use prefix/suffix arrays because a factor can vanish (cycles through
// the critical point), which rules out dividing D by a factor.
struct CycleData {
  Complex value{};   // P^q(z)
  Complex u{};       // d P^q / dz
  Complex v{};       // d P^q / dlambda
  Complex mult{};    // multiplier D
  Complex dmult_dz{};
  Complex dmult_dl{};
};

CycleData cycle_data(Complex lambda, Complex z, int q) {
  std::vector<Complex> zs(q), us(q), vs(q);
  Complex w = z, u = 1.0, v = 0.0;
  for (int k = 0; k < q; ++k) {
    zs[k] = w;
    us[k] = u;
    vs[k] = v;
    const Complex f = logistic_deriv(lambda, w);
    u *= f;
    v = w + f * v;
    w = logistic(lambda, w);
  }
  std::vector<Complex> pre(q + 1), suf(q + 1);
  pre[0] = 1.0;
  for (int k = 0; k < q; ++k) pre[k + 1] = pre[k] * logistic_deriv(lambda, zs[k]);
  suf[q] = 1.0;
  for (int k = q - 1; k >= 0; --k) suf[k] = suf[k + 1] * logistic_deriv(lambda, zs[k]);

  CycleData out;
  out.value = w;
  out.u = u;
  out.v = v;
  out.mult = pre[q];
  for (int k = 0; k < q; ++k) {
    const Complex ring = pre[k] * suf[k + 1];
    out.dmult_dz += ring * 2.0 * us[k];
    out.dmult_dl += ring * (1.0 + 2.0 * vs[k]);
  }
  return out;
}

// One 2x2 Newton solve of { P^q(z) = z, D(z, lambda) = rho } from the given
// approximation, Cramer on the Jacobian. Returns nullopt when the step fails.
std::optional<std::pair<Complex, Complex>> newton_multiplier(Complex lambda, Complex z,
                                                             int q, Complex rho) {
  bool converged = false;
  for (int it = 0; it < 60; ++it) {
    const CycleData cd = cycle_data(lambda, z, q);
    const Complex r1 = cd.value - z;
    const Complex r2 = cd.mult - rho;
    const Complex j11 = cd.u - 1.0, j12 = cd.v;
    const Complex j21 = cd.dmult_dz, j22 = cd.dmult_dl;
    const Complex det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-300) return std::nullopt;
    const Complex dz = (r1 * j22 - j12 * r2) / det;
    const Complex dl = (j11 * r2 - r1 * j21) / det;
    z -= dz;
    lambda -= dl;
    if (!finite(z) || !finite(lambda)) return std::nullopt;
    const double step = std::abs(dz) + std::abs(dl);
    const double scale = 1.0 + std::abs(z) + std::abs(lambda);
    if (step < kNewtonTol * scale || (std::abs(r1) < kNewtonTol && std::abs(r2) < kNewtonTol)) {
      if (!converged) {
        converged = true;
        continue;  // one extra quadratic step for machine accuracy
      }
      return std::make_pair(lambda, z);
    }
    converged = false;
  }
  return std::nullopt;
}

PeriodicOrbit orbit_from_point(Complex lambda, Complex z, int q) {
  PeriodicOrbit out;
  out.cycle.reserve(q);
  Complex w = z, mult = 1.0;
  for (int k = 0; k < q; ++k) {
    out.cycle.push_back(w);
    mult *= logistic_deriv(lambda, w);
    w = logistic(lambda, w);
  }
  out.multiplier = mult;
  return out;
}

void check_exact_period(Complex lambda, Complex z, int q, Complex rho) {
  if (std::abs(rho - 1.0) <= 1e-6) return;  // root merge: divisors collide by design
  for (int d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    if (std::abs(iterate(lambda, z, d) - z) <= 1e-8)
      throw WrongPeriod("cycle period divides " + std::to_string(d));
  }
}

}  // namespace

Complex component_center(const IrreducibleRational& pq) {
  const int q = static_cast<int>(pq.q);
  if (q == 1) return 2.0;

  const Complex omega = pq.omega();
  const double amps[] = {0.4, 0.7, 1.0, 1.4, 2.0};
  const double phases[] = {0.0, 0.4, -0.4, 0.8, -0.8};
  std::optional<Complex> best;
  for (double amp : amps) {
    for (double phase : phases) {
      Complex lambda = omega * (1.0 + amp / (q * q) * std::polar(1.0, phase));
      bool converged = false;
      for (int it = 0; it < 100 && !converged; ++it) {
        // h(lambda) = P^q(-lambda/2) + lambda/2 with the full lambda-derivative.
        Complex w = -lambda / 2.0, dw = Complex(-0.5, 0.0);
        for (int k = 0; k < q; ++k) {
          dw = w + logistic_deriv(lambda, w) * dw;
          w = logistic(lambda, w);
        }
        const Complex h = w + lambda / 2.0;
        const Complex dh = dw + 0.5;
        if (std::abs(dh) == 0.0) break;
        const Complex step = h / dh;
        lambda -= step;
        if (!finite(lambda)) break;
        if (std::abs(step) < kNewtonTol * (1.0 + std::abs(lambda))) converged = true;
      }
      if (!converged) continue;
      // Exact period of the superattracting cycle.
      const Complex crit = critical_point(lambda);
      bool exact = true;
      for (int d = 1; d < q && exact; ++d)
        if (q % d == 0 && std::abs(iterate(lambda, crit, d) - crit) <= 1e-8) exact = false;
      if (std::abs(iterate(lambda, crit, q) - crit) > 1e-9) exact = false;
      if (!exact) continue;
      if (!best || std::abs(lambda - omega) < std::abs(*best - omega)) best = lambda;
    }
  }
  if (!best) throw ContinuationFailure("no superattracting center found near the root");
  return *best;
}

// Tracks the q-cycle along the segment center -> target, Newton in z at each
// step, adaptive halving down to relative step 1e-8.
PeriodicOrbit cycle_at(const IrreducibleRational& pq, Complex target) {
  const int q = static_cast<int>(pq.q);
  const Complex start = component_center(pq);
  Complex lambda = start;
  Complex z = critical_point(start);
  const Complex span = target - start;
  double s = 0.0, h = 1.0 / 64.0;
  while (s < 1.0) {
    const double step = std::min(h, 1.0 - s);
    const Complex next_lambda = start + (s + step) * span;
    std::optional<Complex> solved;
    Complex zi = z;
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
      Complex w = zi, d = 1.0;
      for (int k = 0; k < q; ++k) {
        d *= logistic_deriv(next_lambda, w);
        w = logistic(next_lambda, w);
      }
      const Complex denom = d - 1.0;
      if (std::abs(denom) < 1e-300) break;
      const Complex delta = (w - zi) / denom;
      zi -= delta;
      if (!finite(zi)) break;
      if (std::abs(delta) < kNewtonTol * (1.0 + std::abs(zi))) {
        if (!converged) {
          converged = true;
          continue;
        }
        solved = zi;
        break;
      }
      converged = false;
    }
    if (solved) {
      s += step;
      lambda = next_lambda;
      z = *solved;
      h = std::min(h * 1.3, 1.0 / 16.0);
    } else {
      h /= 2.0;
      if (h < 1e-8) throw ContinuationFailure("cycle continuation stalled");
    }
  }
  (void)lambda;
  return orbit_from_point(target, z, q);
}

Complex multiplier_map(const IrreducibleRational& pq, Complex lambda) {
  const PeriodicOrbit orbit = cycle_at(pq, lambda);
  check_exact_period(lambda, orbit.cycle.front(), static_cast<int>(pq.q), orbit.multiplier);
  return orbit.multiplier;
}

MultiplierSolution invert_multiplier(const IrreducibleRational& pq, Complex rho) {
  const int q = static_cast<int>(pq.q);
  if (std::abs(rho - 1.0) <= 1e-12) {
    // The inverse image of multiplier 1 is the root itself; the cycle there is
    // fully merged with the fixed point 0.
    MultiplierSolution out;
    out.lambda = pq.omega();
    out.orbit = orbit_from_point(out.lambda, 0.0, q);
    return out;
  }

  Complex lambda = component_center(pq);
  Complex z = critical_point(lambda);
  double s = 0.0, h = 1.0 / 64.0;
  while (s < 1.0) {
    const double step = std::min(h, 1.0 - s);
    const Complex target = (s + step) * rho;
    const auto solved = newton_multiplier(lambda, z, q, target);
    if (solved) {
      s += step;
      lambda = solved->first;
      z = solved->second;
      h = std::min(h * 1.3, 1.0 / 16.0);
    } else {
      h /= 2.0;
      if (h < 1e-8) throw ContinuationFailure("multiplier continuation stalled");
    }
  }
  check_exact_period(lambda, z, q, rho);
  MultiplierSolution out;
  out.lambda = lambda;
  out.orbit = orbit_from_point(lambda, z, q);
  return out;
}

MultiplierSolution sublimb_root_solution(const IrreducibleRational& outer,
                                         const IrreducibleRational& inner) {
  return invert_multiplier(outer, inner.omega());
}

Complex sublimb_root(const IrreducibleRational& outer, const IrreducibleRational& inner) {
  return sublimb_root_solution(outer, inner).lambda;
}

Complex big_lambda(const IrreducibleRational& pq, Complex lambda) {
  Complex w = 1.0;
  for (long long k = 0; k < pq.q; ++k) w *= lambda;
  if (w.imag() == 0.0 && w.real() <= 0.0)
    throw BranchCut("lambda^q fell on the negative real axis");
  const Complex big = std::log(w);
  if (big.real() < -1e-12)
    throw OutOfDomain("Lambda outside the closed right half-plane");
  return big;
}

bool yoccoz_disk_check(Complex big_lambda_value) {
  const double log2 = std::log(2.0);
  return std::abs(big_lambda_value - log2) <= log2 + 1e-12;
}

namespace {

struct PixelGrid {
  Complex origin{};  // center of pixel (0, 0)
  double pixel = 0.0;
  int res = 0;
  Complex at(int col, int row) const {
    return origin + Complex(col * pixel, row * pixel);
  }
};

// Newton in z at fixed lambda, seeded from a neighboring pixel's cycle point.
std::optional<Complex> refine_cycle_point(Complex lambda, Complex seed, int q) {
  Complex z = seed;
  for (int it = 0; it < 40; ++it) {
    Complex w = z, d = 1.0;
    for (int k = 0; k < q; ++k) {
      d *= logistic_deriv(lambda, w);
      w = logistic(lambda, w);
    }
    const Complex denom = d - 1.0;
    if (std::abs(denom) < 1e-300) return std::nullopt;
    const Complex delta = (w - z) / denom;
    z -= delta;
    if (!finite(z)) return std::nullopt;
    if (std::abs(delta) < 1e-12 * (1.0 + std::abs(z))) return z;
  }
  return std::nullopt;
}

Complex multiplier_at(Complex lambda, Complex z, int q) {
  Complex w = z, mult = 1.0;
  for (int k = 0; k < q; ++k) {
    mult *= logistic_deriv(lambda, w);
    w = logistic(lambda, w);
  }
  return mult;
}

}  // namespace

DiameterResult sublimb_diameter(const SublimbId& id, int resolution, int max_iter,
                                double window_constant) {
  if (resolution < 64) throw OutOfDomain("resolution must be at least 64");
  const int q = static_cast<int>(id.outer.q);
  const long long qprime = id.inner.q;
  const MultiplierSolution root = sublimb_root_solution(id.outer, id.inner);
  const Complex rho_star = id.inner.omega();

  const double half = 4.0 * window_constant / static_cast<double>(qprime);
  const int res = resolution;
  PixelGrid grid;
  grid.pixel = 2.0 * half / res;
  grid.origin = root.lambda - Complex(half, half) + Complex(grid.pixel, grid.pixel) * 0.5;
  grid.res = res;

  // Membership of every pixel center, rows in parallel.
  std::vector<unsigned char> member(static_cast<std::size_t>(res) * res, 0);
  for_range(res, [&](std::int64_t row) {
    for (int col = 0; col < res; ++col) {
      member[row * res + col] = is_member(grid.at(col, static_cast<int>(row)), max_iter);
    }
  });

  // |dlambda/drho| at the root, for the multiplier band of the wake test.
  const CycleData cd = cycle_data(root.lambda, root.orbit.cycle.front(), q);
  const Complex det = (cd.u - 1.0) * cd.dmult_dl - cd.v * cd.dmult_dz;
  const double dlam_drho = std::abs((cd.u - 1.0) / det);
  const double band = 3.0 * grid.pixel * std::sqrt(2.0) / std::max(dlam_drho, 1e-12);
  const double sector = kPi / static_cast<double>(qprime);

  // Wake-side test: multiplier outside the closed unit disk, or inside it only
  // within the band and angularly close to the root multiplier.
  const auto admissible_rho = [&](Complex rho) {
    const double r = std::abs(rho);
    if (r > 1.0) return true;
    return r > 1.0 - band && std::abs(std::arg(rho * std::conj(rho_star))) <= sector;
  };

  const int root_col = std::clamp(
      static_cast<int>(std::lround((root.lambda.real() - grid.origin.real()) / grid.pixel)),
      0, res - 1);
  const int root_row = std::clamp(
      static_cast<int>(std::lround((root.lambda.imag() - grid.origin.imag()) / grid.pixel)),
      0, res - 1);

  std::vector<unsigned char> state(member.size(), 0);  // 0 new, 1 in component, 2 rejected
  std::vector<Complex> cycle_point(member.size());
  std::deque<std::pair<int, int>> queue;

  const auto try_admit = [&](int col, int row, Complex seed) {
    const std::size_t idx = static_cast<std::size_t>(row) * res + col;
    if (state[idx] != 0) return;
    if (!member[idx]) {
      state[idx] = 2;
      return;
    }
    const Complex lambda = grid.at(col, row);
    const auto z = refine_cycle_point(lambda, seed, q);
    if (!z || !admissible_rho(multiplier_at(lambda, *z, q))) {
      state[idx] = 2;
      return;
    }
    state[idx] = 1;
    cycle_point[idx] = *z;
    queue.emplace_back(col, row);
  };

  // Seed from the root pixel's 5x5 neighborhood (the root sits on the limb
  // boundary, so its own pixel center may just escape).
  for (int dr = -2; dr <= 2; ++dr)
    for (int dc = -2; dc <= 2; ++dc) {
      const int col = root_col + dc, row = root_row + dr;
      if (col < 0 || col >= res || row < 0 || row >= res) continue;
      try_admit(col, row, root.orbit.cycle.front());
    }
  if (queue.empty()) throw RootNotMember("root pixel neighborhood escaped or inadmissible");

  std::vector<Complex> component;
  while (!queue.empty()) {
    const auto [col, row] = queue.front();
    queue.pop_front();
    const std::size_t idx = static_cast<std::size_t>(row) * res + col;
    component.push_back(grid.at(col, row));
    const Complex seed = cycle_point[idx];
    if (col + 1 < res) try_admit(col + 1, row, seed);
    if (col - 1 >= 0) try_admit(col - 1, row, seed);
    if (row + 1 < res) try_admit(col, row + 1, seed);
    if (row - 1 >= 0) try_admit(col, row - 1, seed);
  }

  DiameterResult out;
  out.component_pixels = static_cast<int>(component.size());
  out.euclid = max_pairwise_euclid(component);

  std::vector<Complex> big;
  big.reserve(component.size());
  for (Complex lambda : component) {
    Complex w = 1.0;
    for (int k = 0; k < q; ++k) w *= lambda;
    const Complex lam_big = std::log(w);
    if (lam_big.real() > 0.0) big.push_back(lam_big);
  }
  out.hyp = big.size() >= 2 ? max_pairwise_dist_hr(big) : 0.0;
  return out;
}

}  // namespace satlab

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "satlab/hyperbolic.hpp"

using namespace satlab;

TEST_CASE("distance in the right half-plane") {
  CHECK(dist_hr(1.0, 1.0) == 0.0);
  CHECK(dist_hr(1.0, 2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  // Equal real parts: cosh d = 1 + |dz|^2 / (2 x^2).
  CHECK(dist_hr(1.0, Complex(1.0, 4.0)) ==
        doctest::Approx(std::acosh(9.0)).epsilon(1e-14));

  const Complex a(0.7, -2.0), b(3.0, 5.0), c(0.01, 40.0);
  CHECK(dist_hr(a, b) == dist_hr(b, a));
  CHECK(dist_hr(a, c) <= dist_hr(a, b) + dist_hr(b, c) + 1e-12);

  CHECK_THROWS_AS(dist_hr(Complex(-1.0, 0.0), 1.0), OutOfDomain);
  CHECK_THROWS_AS(dist_hr(1.0, Complex(0.0, 2.0)), OutOfDomain);
}

TEST_CASE("affine stretch between lattices realizes the distance") {
  const std::vector<std::pair<Complex, Complex>> pairs = {
      {Complex(1.0, 0.0), Complex(2.0, 0.0)},
      {Complex(1.0, 1.0), Complex(2.0, -3.0)},
      {Complex(0.1, 7.0), Complex(5.0, 2.0)},
      {Complex(3.0, -0.2), Complex(3.0, 0.2)},
  };
  for (const auto& [l1, l2] : pairs) {
    CHECK(log_stretch_factor(l1, l2) ==
          doctest::Approx(dist_hr(l1, l2)).epsilon(1e-12));
    const AffineStretch map = affine_stretch(l1, l2);
    // The map z -> a z + b conj(z) sends l1 to l2 and fixes the imaginary
    // axis pointwise (a - b = 1).
    CHECK(std::abs(map.a - map.b - 1.0) < 1e-15);
    CHECK(std::abs(map.a * l1 + map.b * std::conj(l1) - l2) < 1e-12);
    CHECK(map.K == doctest::Approx(std::exp(log_stretch_factor(l1, l2))).epsilon(1e-12));
  }
  CHECK(log_stretch_factor(Complex(2.0, 5.0), Complex(2.0, 5.0)) == 0.0);
}

TEST_CASE("upper endpoint of the geodesic through two points") {
  // Circle centered at the origin through 1 + i and 1 - i has radius sqrt(2).
  const double y = geodesic_upper_endpoint(Complex(1.0, 1.0), Complex(1.0, -1.0));
  CHECK(y * kTwoPi == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // Both points on the circle of radius 2 pi: endpoint height exactly 1.
  const Complex l1 = std::polar(kTwoPi, -0.3), l2 = std::polar(kTwoPi, 0.4);
  CHECK(geodesic_upper_endpoint(l1, l2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("continued fraction convergents") {
  const auto pi_tail = convergents_of(3.14159265358979323846 - 3.0);
  REQUIRE(pi_tail.size() >= 4);
  CHECK(pi_tail[0].num == 0);
  CHECK(pi_tail[0].den == 1);
  CHECK(pi_tail[1].num == 1);
  CHECK(pi_tail[1].den == 7);
  CHECK(pi_tail[2].num == 15);
  CHECK(pi_tail[2].den == 106);
  CHECK(pi_tail[3].num == 16);
  CHECK(pi_tail[3].den == 113);

  // Fractional part above 1/2: the leading 0/1 is dropped by default.
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto golden_convs = convergents_of(golden);
  REQUIRE(golden_convs.size() >= 5);
  CHECK(golden_convs[0].num == 1);
  CHECK(golden_convs[0].den == 1);
  CHECK(golden_convs[1].num == 1);
  CHECK(golden_convs[1].den == 2);
  CHECK(golden_convs[2].num == 2);
  CHECK(golden_convs[2].den == 3);
  CHECK(golden_convs[3].num == 3);
  CHECK(golden_convs[3].den == 5);

  const auto golden_full = convergents_of(golden, 40, false);
  CHECK(golden_full[0].num == 0);
  CHECK(golden_full[0].den == 1);
  CHECK(golden_full[1].num == 1);
  CHECK(golden_full[1].den == 1);

  // Exact rationals terminate.
  const auto half = convergents_of(0.5);
  REQUIRE(half.size() == 2);
  CHECK(half[0].num == 0);
  CHECK(half[0].den == 1);
  CHECK(half[1].num == 1);
  CHECK(half[1].den == 2);
  CHECK(half[1].value() == 0.5);

  // Negative values work through the floor-based recursion.
  const auto neg = convergents_of(-0.5, 40, false);
  CHECK(neg.front().num == -1);
  CHECK(neg.front().den == 1);
}

TEST_CASE("bezout pairs") {
  const auto [m1, n1] = bezout_pair(1, 2);
  CHECK(m1 == 0);
  CHECK(n1 == 1);
  const auto [m2, n2] = bezout_pair(2, 3);
  CHECK(m2 == 1);
  CHECK(n2 == 2);
  const auto [m3, n3] = bezout_pair(3, 5);
  CHECK(m3 == 1);
  CHECK(n3 == 2);

  for (long long v = 1; v <= 11; ++v) {
    for (long long u = 0; u <= v; ++u) {
      if (std::gcd(u, v) != 1) continue;
      const auto [m, n] = bezout_pair(u, v);
      CHECK(n * u - v * m == 1);
      CHECK(n >= 1);
      CHECK(n <= v);
    }
  }
  CHECK_THROWS_AS(bezout_pair(2, 4), OutOfDomain);
}

TEST_CASE("lattice mobius maps") {
  // u/v = 1/1 with bezout (m, n) = (0, 1): A(z) = -2 pi i z / (z - 2 pi i).
  const LatticeMobius map{1, 0, 1, 1};
  CHECK(map.det() == 1);
  const Complex image = map.apply(Complex(kTwoPi, 0.0));
  CHECK(std::abs(image - Complex(kPi, -kPi)) < 1e-12);
  CHECK_THROWS_AS(map.apply(Complex(0.0, kTwoPi)), OutOfDomain);
}

TEST_CASE("convex hull and pairwise extremes") {
  std::vector<Complex> points = {
      {0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0},
      {0.5, 0.5}, {0.25, 0.75}, {0.9, 0.1},
  };
  const auto hull = convex_hull(points);
  CHECK(hull.size() == 4);
  CHECK(max_pairwise_euclid(points) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  std::vector<Complex> shifted;
  for (Complex z : points) shifted.push_back(z + Complex(1.0, 0.0));
  double direct = 0.0;
  for (Complex a : shifted)
    for (Complex b : shifted) direct = std::max(direct, dist_hr(a, b));
  CHECK(max_pairwise_dist_hr(shifted) == doctest::Approx(direct).epsilon(1e-13));

  const std::vector<Complex> collinear = {{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}};
  CHECK(max_pairwise_euclid(collinear) ==
        doctest::Approx(std::sqrt(8.0)).epsilon(1e-14));
  CHECK(max_pairwise_euclid({Complex(3.0, 4.0)}) == 0.0);
}

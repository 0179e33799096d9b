#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "satlab/experiments.hpp"
#include "satlab/hyperbolic.hpp"
#include "satlab/parameter.hpp"

using namespace satlab;

namespace {

const IrreducibleRational kMain(0, 1);
const IrreducibleRational kHalf(1, 2);
const IrreducibleRational kThird(1, 3);

}  // namespace

TEST_CASE("contour residual at small-denominator roots") {
  // q = 2: the merged triple point of P^2 at lambda = -1 carries residual 11/8.
  const Complex half = residue_contour(kHalf);
  CHECK(std::abs(half - Complex(1.375, 0.0)) < 1e-8);

  // q = 1 reduces to the parabolic fixed point of P_1.
  const Complex main = residue_contour(kMain);
  CHECK(std::abs(main - Complex(1.0, 0.0)) < 1e-8);

  // q = 3, frozen from an independent quadrature; the conjugate angle gives
  // the conjugate residual.
  const Complex third = residue_contour(kThird);
  CHECK(std::abs(third - Complex(1.773242630385, 0.031420422813)) < 1e-6);
  const Complex conj_third = residue_contour(IrreducibleRational(2, 3));
  CHECK(std::abs(conj_third - std::conj(third)) < 1e-9);

  CHECK_THROWS_AS(residue_contour(IrreducibleRational(1, 8)), OutOfDomain);
}

TEST_CASE("expansion fit recovers the contour residual") {
  const ResidueFit fit = residue_fit(kHalf);
  CHECK(std::abs(fit.residue - Complex(1.375, 0.0)) / 1.375 < 1e-3);
  CHECK(fit.rms_residual < 0.1);

  CHECK_THROWS_AS(residue_fit(kHalf, {1e-5, 1e-4, 2e-4, 3e-4, 4e-4, 5e-4}),
                  OutOfDomain);
  CHECK_THROWS_AS(residue_fit(kHalf, {1e-3, 2e-3, 3e-3}), IllConditionedFit);
}

TEST_CASE("circulation matches the multiplier logarithm identity") {
  // H(Lambda) = 1/Lambda + q / Log(rho) with rho tracked independently.
  for (Complex big : {Complex(0.1, 0.0), Complex(0.05, 0.1)}) {
    const Complex h = buff_h(kHalf, big);
    const Complex lambda = kHalf.omega() * std::exp(big / 2.0);
    const Complex p_log = std::log(multiplier_map(kHalf, lambda));
    CHECK(std::abs(h - 1.0 / big - 2.0 / p_log) < 1e-6);
  }
}

TEST_CASE("boundary parameters and their half-plane coordinates") {
  const auto [lambda, big] = lambda_of_t(kHalf, 0.1);
  CHECK(std::abs(multiplier_map(kHalf, lambda) - std::polar(1.0, 0.1)) < 1e-10);
  // Lambda = -P/q - Res (P/q)^2 + O(P^3) with P = 0.1i.
  CHECK(std::abs(big - Complex(1.375 * 0.0025, -0.05)) < 5e-4);

  CHECK_THROWS_AS(lambda_of_t(kHalf, 0.0), OutOfDomain);
  CHECK_THROWS_AS(lambda_of_t(kHalf, 1.0), OutOfDomain);
}

TEST_CASE("divergence scan across different denominators") {
  const std::vector<double> grid = {1e-2, 1e-3, 1e-4};
  const auto rows = divergence_scan(kHalf, kThird, grid);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].t == grid[i]);
    CHECK(rows[i].bound ==
          doctest::Approx(2.0 * std::log(1.0 / grid[i])).epsilon(1e-12));
    CHECK(rows[i].lambda_first.real() > 0.0);
    CHECK(rows[i].lambda_second.real() > 0.0);
    CHECK(rows[i].dist ==
          doctest::Approx(dist_hr(rows[i].lambda_first, rows[i].lambda_second))
              .epsilon(1e-12));
  }
  CHECK(rows[0].dist < rows[1].dist);
  CHECK(rows[1].dist < rows[2].dist);

  CHECK_THROWS_AS(divergence_scan(kHalf, kHalf, grid), OutOfDomain);
  CHECK_THROWS_AS(divergence_scan(kHalf, kThird, {1e-4, 1e-3}), OutOfDomain);
  CHECK_THROWS_AS(divergence_scan(kHalf, kThird, {}), OutOfDomain);
}

TEST_CASE("root distances of corresponding sublimbs") {
  const auto rows = corollary_check(kHalf, kThird, 2, 4);
  REQUIRE(rows.size() == 3);
  // Frozen from an independent root solve of both multiplier maps.
  CHECK(rows[0].dist == doctest::Approx(0.3095141).epsilon(1e-5));
  CHECK(rows[1].dist == doctest::Approx(0.3682212).epsilon(1e-5));
  CHECK(rows[2].dist == doctest::Approx(0.4506110).epsilon(1e-5));
  CHECK(rows[0].n == 2);
  CHECK(rows[2].n == 4);

  CHECK_THROWS_AS(corollary_check(kHalf, kThird, 1, 4), OutOfDomain);
}

TEST_CASE("sublimb survey assembles roots, bounds and diameters") {
  const auto records = small_limb_scan(kHalf, 2, 3, 64, 2048);
  REQUIRE(records.size() == 2);
  CHECK(records[0].n == 2);
  CHECK(records[0].inner.p == 3);
  CHECK(records[0].inner.q == 8);
  CHECK(records[1].inner.p == 8);
  CHECK(records[1].inner.q == 27);

  // re_lower_bound = Re(Res) (2 pi / (q n))^2 with Res = 11/8, q = 2.
  CHECK(records[0].re_lower_bound ==
        doctest::Approx(1.375 * kPi * kPi / 4.0).epsilon(1e-9));
  CHECK(records[0].big_lambda_root.real() > 0.0);
  CHECK(records[0].euclid_diam > records[1].euclid_diam);

  CHECK_THROWS_AS(small_limb_scan(kHalf, 1, 3, 64, 2048), OutOfDomain);
}

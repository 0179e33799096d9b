// Compares the parallel kernels against single-thread runs of the same code:
// wall time, speedup, and bit-exactness of the results. The library promises
// thread-count independence; this tool demonstrates it on realistic sizes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "satlab/dynamics.hpp"
#include "satlab/modulus.hpp"
#include "satlab/parallel.hpp"
#include "satlab/render.hpp"

using namespace satlab;

namespace {

template <class F>
double seconds(F&& work) {
  const auto start = std::chrono::steady_clock::now();
  work();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

struct Row {
  const char* name;
  double serial_s;
  double parallel_s;
  bool identical;
};

void print(const Row& row) {
  std::printf("%-22s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              row.name, row.serial_s, row.parallel_s,
              row.serial_s / row.parallel_s,
              row.identical ? "bit-identical" : "MISMATCH");
}

Row bench_raster() {
  Viewport view;
  view.center = Complex(-0.5, 0.0);
  view.half_w = view.half_h = 1.8;
  view.px_w = view.px_h = 768;
  const IrreducibleRational pq(0, 1);

  Image parallel_img, serial_img;
  const double par = seconds(
      [&] { parallel_img = render_membership(view, Plane::Lambda, pq, 2048); });
  setenv("SATLAB_THREADS", "1", 1);
  const double ser = seconds(
      [&] { serial_img = render_membership(view, Plane::Lambda, pq, 2048); });
  unsetenv("SATLAB_THREADS");
  return {"membership raster", ser, par, parallel_img.rgb == serial_img.rgb};
}

Row bench_quadrature() {
  const Complex lambda = std::polar(1.0, kTwoPi / 3.0) * std::exp(Complex(0.05, 0.0));
  const auto integrand = [lambda](Complex w) {
    Complex value = w, deriv = 1.0;
    for (int k = 0; k < 3; ++k) {
      deriv *= logistic_deriv(lambda, value);
      value = logistic(lambda, value);
    }
    return (deriv - 1.0) / (value - w);
  };
  const std::int64_t n = 1 << 19;
  const double r = 0.3;
  std::vector<Complex> parallel_samples(n), serial_samples(n);
  const auto fill = [&](std::vector<Complex>& out, std::int64_t i) {
    const double theta = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    const Complex dir = std::polar(1.0, theta);
    out[i] = integrand(r * dir) * dir;
  };

  Complex parallel_sum, serial_sum;
  const double par = seconds([&] {
    for_range(n, [&](std::int64_t i) { fill(parallel_samples, i); });
    parallel_sum = block_sum(parallel_samples);
  });
  const double ser = seconds([&] {
    for_range_serial(n, [&](std::int64_t i) { fill(serial_samples, i); });
    serial_sum = block_sum(serial_samples);
  });
  return {"contour quadrature", ser, par,
          parallel_samples == serial_samples && parallel_sum == serial_sum};
}

Row bench_modulus() {
  double parallel_mod = 0.0, serial_mod = 0.0;
  const double par =
      seconds([&] { parallel_mod = parallelogram_modulus(1.0, Complex(0.0, 2.0), 192); });
  setenv("SATLAB_THREADS", "1", 1);
  const double ser =
      seconds([&] { serial_mod = parallelogram_modulus(1.0, Complex(0.0, 2.0), 192); });
  unsetenv("SATLAB_THREADS");
  return {"torus modulus solve", ser, par, parallel_mod == serial_mod};
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", thread_budget());
  const Row rows[] = {bench_raster(), bench_quadrature(), bench_modulus()};
  bool all_identical = true;
  for (const Row& row : rows) {
    print(row);
    all_identical = all_identical && row.identical;
  }
  return all_identical ? 0 : 1;
}

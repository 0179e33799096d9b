#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>

#include "satlab/render.hpp"

using namespace satlab;

namespace {

const IrreducibleRational kMain(0, 1);
const IrreducibleRational kHalf(1, 2);

Viewport tiny_view(Complex center, double half, int px) {
  Viewport view;
  view.center = center;
  view.half_w = view.half_h = half;
  view.px_w = view.px_h = px;
  return view;
}

}  // namespace

TEST_CASE("pixel coordinates") {
  const Viewport view = tiny_view(Complex(1.0, 2.0), 1.0, 4);
  // Row 0 is the top of the image.
  const Complex top_left = pixel_parameter(view, 0, 0, Plane::Lambda, kMain);
  CHECK(std::abs(top_left - Complex(0.25, 2.75)) < 1e-15);
  const Complex bottom_right = pixel_parameter(view, 3, 3, Plane::Lambda, kMain);
  CHECK(std::abs(bottom_right - Complex(1.75, 1.25)) < 1e-15);

  // In the log plane the pixel coordinate is exponentiated onto the limb.
  const Complex big = pixel_parameter(view, 0, 0, Plane::BigLambda, kHalf);
  CHECK(std::abs(big - kHalf.omega() * std::exp(Complex(0.25, 2.75) / 2.0)) < 1e-15);
}

TEST_CASE("single member pixel is black") {
  const Image image = render_membership(tiny_view(0.0, 0.01, 1), Plane::Lambda,
                                        kMain, 256);
  REQUIRE(image.rgb.size() == 3);
  CHECK(image.rgb[0] == 0);
  CHECK(image.rgb[1] == 0);
  CHECK(image.rgb[2] == 0);
}

TEST_CASE("escaping region is shaded, not black") {
  const Image image = render_membership(tiny_view(Complex(-3.0, 0.0), 0.01, 2),
                                        Plane::Lambda, kMain, 256);
  for (std::size_t i = 0; i < image.rgb.size(); ++i) CHECK(image.rgb[i] > 0);
}

TEST_CASE("membership survives a larger iteration budget") {
  const Viewport view = tiny_view(Complex(-1.0, 0.0), 0.6, 32);
  const Image coarse = render_membership(view, Plane::Lambda, kMain, 256);
  const Image fine = render_membership(view, Plane::Lambda, kMain, 512);
  for (int row = 0; row < 32; ++row) {
    for (int col = 0; col < 32; ++col) {
      if (fine.at(col, row)[0] == 0) CHECK(coarse.at(col, row)[0] == 0);
    }
  }
}

TEST_CASE("rendering does not depend on the thread count") {
  const Viewport view = tiny_view(Complex(-0.5, 0.0), 1.5, 32);
  const Image parallel_img = render_membership(view, Plane::Lambda, kMain, 512);
  setenv("SATLAB_THREADS", "1", 1);
  const Image serial_img = render_membership(view, Plane::Lambda, kMain, 512);
  unsetenv("SATLAB_THREADS");
  CHECK(parallel_img.rgb == serial_img.rgb);
}

TEST_CASE("ppm encoding is exact") {
  Image white;
  white.width = white.height = 1;
  white.rgb = {255, 255, 255};
  const std::string bytes = encode_ppm(white);
  CHECK(bytes == std::string("P6\n1 1\n255\n\xff\xff\xff", 14));

  Image two;
  two.width = 2;
  two.height = 1;
  two.rgb = {0, 0, 0, 255, 255, 255};
  CHECK(encode_ppm(two).size() == std::string("P6\n2 1\n255\n").size() + 6);
}

TEST_CASE("ppm round trip") {
  std::mt19937 rng(12345);
  Image image;
  image.width = image.height = 8;
  image.rgb.resize(8 * 8 * 3);
  for (auto& byte : image.rgb) byte = static_cast<std::uint8_t>(rng() & 0xff);

  const Image back = decode_ppm(encode_ppm(image));
  CHECK(back.width == 8);
  CHECK(back.height == 8);
  CHECK(back.rgb == image.rgb);

  CHECK_THROWS_AS(decode_ppm("P5\n1 1\n255\nx"), std::runtime_error);
  CHECK_THROWS_AS(decode_ppm("P6\n2 2\n255\nshort"), std::runtime_error);
}

TEST_CASE("per-pixel csv dump") {
  const std::string csv = membership_csv(tiny_view(0.0, 0.01, 2), Plane::Lambda,
                                         kMain, 128);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "col,row,re,im,member,escape_step");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    // All four pixels sit in the main component: member flag 1, the escape
    // column saturates at the iteration cap.
    CHECK(line.substr(line.size() - 6) == ",1,128");
  }
  CHECK(rows == 4);
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "satlab/types.hpp"

namespace satlab {

enum class Plane { Lambda, BigLambda };

struct Viewport {
  Complex center;
  double half_w = 1.0;
  double half_h = 1.0;
  int px_w = 256;
  int px_h = 256;
};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel, row 0 on top

  std::uint8_t* at(int col, int row) { return rgb.data() + 3 * (row * width + col); }
  const std::uint8_t* at(int col, int row) const {
    return rgb.data() + 3 * (row * width + col);
  }
};

// Parameter under the pixel at (col, row). In the Lambda plane the pixel
// coordinate is the parameter itself; in the BigLambda plane it is the
// coordinate Z and the parameter is omega * exp(Z / q).
Complex pixel_parameter(const Viewport& view, int col, int row, Plane plane,
                        const IrreducibleRational& pq);

// Raster of the connectedness locus of the family lambda z + z^2 over the
// viewport: black where the critical orbit stays bounded for max_iter steps,
// otherwise a gray level decaying with the logarithm of the escape time.
Image render_membership(const Viewport& view, Plane plane,
                        const IrreducibleRational& pq, int max_iter = 1024);

// Binary PPM (P6) round trip.
std::string encode_ppm(const Image& image);
Image decode_ppm(const std::string& data);
void write_ppm(const std::string& path, const Image& image);

// Per-pixel dump of the same raster: col, row, re, im, member, escape_step.
std::string membership_csv(const Viewport& view, Plane plane,
                           const IrreducibleRational& pq, int max_iter = 1024);

}  // namespace satlab

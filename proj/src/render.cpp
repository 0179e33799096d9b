#include "satlab/render.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "satlab/dynamics.hpp"
#include "satlab/parallel.hpp"
#include "satlab/report.hpp"

namespace satlab {

Complex pixel_parameter(const Viewport& view, int col, int row, Plane plane,
                        const IrreducibleRational& pq) {
  const double re =
      view.center.real() - view.half_w + (col + 0.5) * (2.0 * view.half_w / view.px_w);
  const double im =
      view.center.imag() + view.half_h - (row + 0.5) * (2.0 * view.half_h / view.px_h);
  const Complex z(re, im);
  if (plane == Plane::Lambda) return z;
  return pq.omega() * std::exp(z / static_cast<double>(pq.q));
}

namespace {

// Escapees fade from white (immediate escape) to dark gray (escape close to
// the iteration cap); members are black.
std::uint8_t escape_shade(const OrbitResult& orbit, int max_iter) {
  if (!orbit.escaped) return 0;
  const double frac =
      std::log1p(static_cast<double>(orbit.escape_step)) / std::log1p(max_iter);
  return static_cast<std::uint8_t>(255.0 - 190.0 * std::min(1.0, frac));
}

}  // namespace

Image render_membership(const Viewport& view, Plane plane,
                        const IrreducibleRational& pq, int max_iter) {
  if (view.px_w < 1 || view.px_h < 1 || !(view.half_w > 0.0) || !(view.half_h > 0.0))
    throw OutOfDomain("viewport must have positive extent");
  Image image;
  image.width = view.px_w;
  image.height = view.px_h;
  image.rgb.assign(static_cast<std::size_t>(view.px_w) * view.px_h * 3, 0);

  for_range(view.px_h, [&](std::int64_t row) {
    for (int col = 0; col < view.px_w; ++col) {
      const Complex lambda =
          pixel_parameter(view, col, static_cast<int>(row), plane, pq);
      const OrbitResult orbit = iterate_critical(lambda, max_iter);
      const std::uint8_t shade = escape_shade(orbit, max_iter);
      std::uint8_t* px = image.at(col, static_cast<int>(row));
      px[0] = px[1] = px[2] = shade;
    }
  });
  return image;
}

std::string encode_ppm(const Image& image) {
  std::ostringstream out;
  out << "P6\n" << image.width << " " << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.rgb.data()),
            static_cast<std::streamsize>(image.rgb.size()));
  return out.str();
}

Image decode_ppm(const std::string& data) {
  std::istringstream in(data);
  std::string magic;
  int width = 0, height = 0, maxval = 0;
  in >> magic >> width >> height >> maxval;
  if (magic != "P6" || width < 1 || height < 1 || maxval != 255)
    throw std::runtime_error("not a supported P6 image");
  in.get();  // single whitespace byte after the header
  Image image;
  image.width = width;
  image.height = height;
  image.rgb.resize(static_cast<std::size_t>(width) * height * 3);
  in.read(reinterpret_cast<char*>(image.rgb.data()),
          static_cast<std::streamsize>(image.rgb.size()));
  if (in.gcount() != static_cast<std::streamsize>(image.rgb.size()))
    throw std::runtime_error("truncated P6 image");
  return image;
}

void write_ppm(const std::string& path, const Image& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  const std::string data = encode_ppm(image);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("short write to " + path);
}

std::string membership_csv(const Viewport& view, Plane plane,
                           const IrreducibleRational& pq, int max_iter) {
  CsvWriter csv({"col", "row", "re", "im", "member", "escape_step"});
  for (int row = 0; row < view.px_h; ++row) {
    for (int col = 0; col < view.px_w; ++col) {
      const Complex lambda = pixel_parameter(view, col, row, plane, pq);
      const OrbitResult orbit = iterate_critical(lambda, max_iter);
      csv.row({std::to_string(col), std::to_string(row), g17(lambda.real()),
               g17(lambda.imag()), orbit.escaped ? "0" : "1",
               std::to_string(orbit.escaped ? orbit.escape_step : max_iter)});
    }
  }
  return csv.str();
}

}  // namespace satlab

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "echomap/detect.hpp"
#include "echomap/groundtruth.hpp"
#include "echomap/mapping.hpp"

namespace echomap {

struct GrayRaster {
  int width{0};
  int height{0};
  std::vector<std::uint8_t> pixels;  // row-major
};

struct RgbRaster {
  int width{0};
  int height{0};
  std::vector<std::uint8_t> data;  // row-major, 3 bytes per pixel
};

// Piecewise-linear colormap: anchors at strictly increasing positions in
// [0,1], expanded to a 256-entry lookup table.
struct ColorMap {
  std::string name;
  std::vector<std::pair<double, std::array<std::uint8_t, 3>>> anchors;

  std::array<std::uint8_t, 3> sample(double t) const;
};

// Warm-to-cool default (red, orange, yellow, green, blue): low frequencies
// map to warm colors, high to cool.
const ColorMap& warm_cool_colormap();

// Color-mapped frequency raster: grid min -> anchor 0, max -> anchor 1; a
// constant grid renders as the uniform mid color. Each cell becomes an
// upscale x upscale block; `smooth` switches to bilinear interpolation for
// a contour-like appearance.
RgbRaster heatmap(const FrequencyGrid& grid, const ColorMap& cmap, int upscale,
                  bool smooth = false);

// 0 -> black, 1 -> white, block-replicated.
GrayRaster mask_raster(const BinaryMask& mask, int upscale);

// Per-pixel blend: out = alpha*dm + (1-alpha)*gtm, rounded half up.
RgbRaster overlay(const GrayRaster& gtm_raster, const RgbRaster& dm_raster, double alpha);

RgbRaster to_rgb(const GrayRaster& gray);

// "x,y,f" triples, row-major, exact decimal text of the stored values.
std::string surface_csv(const FrequencyGrid& grid);

}  // namespace echomap

#include "echomap/render.hpp"

#include <algorithm>
#include <cmath>

#include "echomap/errors.hpp"
#include "echomap/io.hpp"

namespace echomap {

namespace {

std::array<std::uint8_t, 3> interpolate_anchor(
    const std::vector<std::pair<double, std::array<std::uint8_t, 3>>>& anchors, double t) {
  if (t <= anchors.front().first) return anchors.front().second;
  if (t >= anchors.back().first) return anchors.back().second;
  std::size_t hi = 1;
  while (anchors[hi].first < t) ++hi;
  const auto& [p0, c0] = anchors[hi - 1];
  const auto& [p1, c1] = anchors[hi];
  const double w = (t - p0) / (p1 - p0);
  std::array<std::uint8_t, 3> out{};
  for (int ch = 0; ch < 3; ++ch) {
    const double v = c0[ch] + w * (static_cast<double>(c1[ch]) - c0[ch]);
    out[ch] = static_cast<std::uint8_t>(std::lround(v));
  }
  return out;
}

}  // namespace

std::array<std::uint8_t, 3> ColorMap::sample(double t) const {
  if (anchors.empty()) throw DataError("colormap '" + name + "' has no anchors");
  t = std::clamp(t, 0.0, 1.0);
  // Quantize through the 256-entry table so equal-looking inputs can never
  // produce off-by-one channel values from FP noise.
  const int idx = static_cast<int>(std::lround(t * 255.0));
  return interpolate_anchor(anchors, idx / 255.0);
}

const ColorMap& warm_cool_colormap() {
  static const ColorMap cmap{
      "warm-cool",
      {
          {0.00, {178, 24, 43}},    // red
          {0.25, {239, 138, 98}},   // orange
          {0.50, {254, 224, 144}},  // yellow
          {0.75, {116, 173, 209}},  // green-blue
          {1.00, {33, 102, 172}},   // blue
      },
  };
  return cmap;
}

RgbRaster heatmap(const FrequencyGrid& grid, const ColorMap& cmap, int upscale,
                  bool smooth) {
  if (upscale < 1) throw DataError("heatmap: upscale must be at least 1");
  const int rows = grid.shape.rows, cols = grid.shape.cols;
  const auto [lo_it, hi_it] =
      std::minmax_element(grid.values_hz.begin(), grid.values_hz.end());
  const double lo = *lo_it, span = *hi_it - *lo_it;

  RgbRaster img;
  img.width = cols * upscale;
  img.height = rows * upscale;
  img.data.resize(static_cast<std::size_t>(img.width) * img.height * 3);

  auto put = [&](int i, int j, const std::array<std::uint8_t, 3>& c) {
    const std::size_t base = (static_cast<std::size_t>(i) * img.width + j) * 3;
    img.data[base] = c[0];
    img.data[base + 1] = c[1];
    img.data[base + 2] = c[2];
  };

  if (!smooth) {
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const double t = span > 0.0 ? (grid.at(r, c) - lo) / span : 0.5;
        const auto color = cmap.sample(t);
        for (int di = 0; di < upscale; ++di) {
          for (int dj = 0; dj < upscale; ++dj) {
            put(r * upscale + di, c * upscale + dj, color);
          }
        }
      }
    }
    return img;
  }

  for (int i = 0; i < img.height; ++i) {
    const double gy = std::clamp((i + 0.5) / upscale - 0.5, 0.0, rows - 1.0);
    const int r0 = static_cast<int>(gy);
    const int r1 = std::min(r0 + 1, rows - 1);
    const double wy = gy - r0;
    for (int j = 0; j < img.width; ++j) {
      const double gx = std::clamp((j + 0.5) / upscale - 0.5, 0.0, cols - 1.0);
      const int c0 = static_cast<int>(gx);
      const int c1 = std::min(c0 + 1, cols - 1);
      const double wx = gx - c0;
      const double v = (1 - wy) * ((1 - wx) * grid.at(r0, c0) + wx * grid.at(r0, c1)) +
                       wy * ((1 - wx) * grid.at(r1, c0) + wx * grid.at(r1, c1));
      const double t = span > 0.0 ? (v - lo) / span : 0.5;
      put(i, j, cmap.sample(t));
    }
  }
  return img;
}

GrayRaster mask_raster(const BinaryMask& mask, int upscale) {
  if (upscale < 1) throw DataError("mask_raster: upscale must be at least 1");
  GrayRaster img;
  img.width = mask.shape.cols * upscale;
  img.height = mask.shape.rows * upscale;
  img.pixels.resize(static_cast<std::size_t>(img.width) * img.height);
  for (int r = 0; r < mask.shape.rows; ++r) {
    for (int c = 0; c < mask.shape.cols; ++c) {
      const std::uint8_t v = mask.at(r, c) == 0 ? 0 : 255;
      for (int di = 0; di < upscale; ++di) {
        const std::size_t base =
            static_cast<std::size_t>(r * upscale + di) * img.width +
            static_cast<std::size_t>(c) * upscale;
        std::fill_n(img.pixels.begin() + static_cast<std::ptrdiff_t>(base), upscale, v);
      }
    }
  }
  return img;
}

RgbRaster to_rgb(const GrayRaster& gray) {
  RgbRaster img;
  img.width = gray.width;
  img.height = gray.height;
  img.data.resize(gray.pixels.size() * 3);
  for (std::size_t i = 0; i < gray.pixels.size(); ++i) {
    img.data[3 * i] = img.data[3 * i + 1] = img.data[3 * i + 2] = gray.pixels[i];
  }
  return img;
}

RgbRaster overlay(const GrayRaster& gtm_raster, const RgbRaster& dm_raster, double alpha) {
  if (gtm_raster.width != dm_raster.width || gtm_raster.height != dm_raster.height) {
    throw DataError("overlay: raster dimensions differ");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DataError("overlay: alpha must lie in [0, 1]");
  }
  RgbRaster out;
  out.width = dm_raster.width;
  out.height = dm_raster.height;
  out.data.resize(dm_raster.data.size());
  for (std::size_t i = 0; i < gtm_raster.pixels.size(); ++i) {
    const double g = gtm_raster.pixels[i];
    for (int ch = 0; ch < 3; ++ch) {
      const double v = alpha * dm_raster.data[3 * i + ch] + (1.0 - alpha) * g;
      out.data[3 * i + ch] = static_cast<std::uint8_t>(std::floor(v + 0.5));
    }
  }
  return out;
}

std::string surface_csv(const FrequencyGrid& grid) {
  std::string text;
  for (int r = 0; r < grid.shape.rows; ++r) {
    for (int c = 0; c < grid.shape.cols; ++c) {
      text += std::to_string(c);
      text += ",";
      text += std::to_string(r);
      text += ",";
      text += format_exact(grid.at(r, c));
      text += "\n";
    }
  }
  return text;
}

}  // namespace echomap

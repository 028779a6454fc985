#include <doctest.h>

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "echomap/errors.hpp"
#include "echomap/io.hpp"
#include "echomap/render.hpp"
#include "support/builders.hpp"

using namespace echomap;
using builders::make_grid;
using builders::make_mask;

namespace {

std::array<std::uint8_t, 3> pixel(const RgbRaster& img, int x, int y) {
  const std::size_t o = 3 * (static_cast<std::size_t>(y) * img.width + x);
  return {img.data[o], img.data[o + 1], img.data[o + 2]};
}

}  // namespace

TEST_CASE("the warm-cool colormap anchors its endpoints") {
  const auto& cmap = warm_cool_colormap();
  CHECK(cmap.sample(0.0) == std::array<std::uint8_t, 3>{178, 24, 43});
  CHECK(cmap.sample(1.0) == std::array<std::uint8_t, 3>{33, 102, 172});
  // 0.5 sits between table entries, so allow one quantization step.
  const auto mid = cmap.sample(0.5);
  CHECK(std::abs(mid[0] - 254) <= 2);
  CHECK(std::abs(mid[1] - 224) <= 2);
  CHECK(std::abs(mid[2] - 144) <= 2);
  CHECK(cmap.sample(-4.0) == cmap.sample(0.0));
  CHECK(cmap.sample(7.0) == cmap.sample(1.0));
}

TEST_CASE("heatmap maps grid extremes to the colormap endpoints") {
  const auto img = heatmap(make_grid(1, 2, {100.0, 200.0}), warm_cool_colormap(), 1);
  CHECK(img.width == 2);
  CHECK(img.height == 1);
  CHECK(pixel(img, 0, 0) == warm_cool_colormap().sample(0.0));
  CHECK(pixel(img, 1, 0) == warm_cool_colormap().sample(1.0));
}

TEST_CASE("a constant grid renders as the uniform mid color") {
  const auto img = heatmap(make_grid(2, 2, {9.0, 9.0, 9.0, 9.0}), warm_cool_colormap(), 2);
  const auto mid = warm_cool_colormap().sample(0.5);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      CHECK(pixel(img, x, y) == mid);
    }
  }
}

TEST_CASE("heatmap upscales by block replication") {
  const auto img = heatmap(make_grid(2, 3, {1, 2, 3, 4, 5, 6}), warm_cool_colormap(), 10);
  CHECK(img.width == 30);
  CHECK(img.height == 20);
  const auto corner = pixel(img, 0, 0);
  for (int y = 0; y < 10; ++y) {
    for (int x = 0; x < 10; ++x) {
      CHECK(pixel(img, x, y) == corner);
    }
  }
}

TEST_CASE("smooth heatmaps interpolate between cell centers") {
  const auto img =
      heatmap(make_grid(1, 2, {100.0, 200.0}), warm_cool_colormap(), 2, true);
  CHECK(img.width == 4);
  // Sample positions fall at t = 0, 0.25, 0.75, 1 along the gradient.
  CHECK(pixel(img, 0, 0) == warm_cool_colormap().sample(0.0));
  CHECK(pixel(img, 1, 0) == warm_cool_colormap().sample(0.25));
  CHECK(pixel(img, 2, 0) == warm_cool_colormap().sample(0.75));
  CHECK(pixel(img, 3, 0) == warm_cool_colormap().sample(1.0));
}

TEST_CASE("heatmap rejects a non-positive upscale") {
  CHECK_THROWS_AS(heatmap(make_grid(1, 1, {1.0}), warm_cool_colormap(), 0), DataError);
}

TEST_CASE("mask_raster paints defect black and clear white") {
  const auto img = mask_raster(make_mask(1, 2, {0, 1}), 1);
  CHECK(img.pixels == std::vector<std::uint8_t>{0, 255});

  const auto big = mask_raster(make_mask(1, 2, {0, 1}), 2);
  CHECK(big.width == 4);
  CHECK(big.height == 2);
  CHECK(big.pixels == std::vector<std::uint8_t>{0, 0, 255, 255, 0, 0, 255, 255});
}

TEST_CASE("overlay blends with the given alpha, rounding half up") {
  GrayRaster gtm{1, 1, {0}};
  RgbRaster dm{1, 1, {255, 255, 255}};
  CHECK(overlay(gtm, dm, 1.0).data == std::vector<std::uint8_t>{255, 255, 255});
  CHECK(overlay(gtm, dm, 0.0).data == std::vector<std::uint8_t>{0, 0, 0});
  CHECK(overlay(gtm, dm, 0.5).data == std::vector<std::uint8_t>{128, 128, 128});
}

TEST_CASE("overlay validates dimensions and alpha") {
  GrayRaster gtm{2, 1, {0, 0}};
  RgbRaster dm{1, 1, {255, 255, 255}};
  CHECK_THROWS_AS(overlay(gtm, dm, 0.5), DataError);

  GrayRaster ok{1, 1, {0}};
  CHECK_THROWS_AS(overlay(ok, dm, -0.1), DataError);
  CHECK_THROWS_AS(overlay(ok, dm, 1.5), DataError);
}

TEST_CASE("to_rgb replicates the gray channel") {
  GrayRaster gray{2, 1, {7, 200}};
  const auto rgb = to_rgb(gray);
  CHECK(rgb.data == std::vector<std::uint8_t>{7, 7, 7, 200, 200, 200});
}

TEST_CASE("surface_csv lists x,y,f triples row-major") {
  CHECK(surface_csv(make_grid(1, 1, {440.0})) == "0,0,440\n");
  const auto text = surface_csv(make_grid(2, 2, {1.5, 2.0, 3.0, 4.25}));
  CHECK(text == "0,0,1.5\n1,0,2\n0,1,3\n1,1,4.25\n");
}

TEST_CASE("surface_csv values parse back exactly") {
  const auto grid = make_grid(1, 3, {0.1, 1.0 / 3.0, 12709.48});
  std::istringstream in(surface_csv(grid));
  std::string line;
  int i = 0;
  while (std::getline(in, line)) {
    const auto second_comma = line.find(',', line.find(',') + 1);
    CHECK(std::stod(line.substr(second_comma + 1)) == grid.values_hz[i]);
    ++i;
  }
  CHECK(i == 3);
}

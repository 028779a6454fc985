#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "echomap/errors.hpp"
#include "echomap/io.hpp"
#include "support/builders.hpp"

using namespace echomap;
using builders::make_grid;
using builders::make_mask;

TEST_CASE("format_exact round-trips doubles through text") {
  for (double v : {0.1, 1.0 / 3.0, 1e300, 5e-324, -12345.6789, std::numbers::pi,
                   0.0, 61429.17}) {
    CHECK(std::strtod(format_exact(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("format_sig6 keeps six significant digits") {
  CHECK(format_sig6(0.123456789) == "0.123457");
  CHECK(format_sig6(1234567.0) == "1.23457e+06");
  CHECK(format_sig6(2.0) == "2");
  CHECK(format_sig6(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_sig6(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("round_sig6 rounds the value itself") {
  CHECK(round_sig6(0.123456789) == 0.123457);
  CHECK(round_sig6(0.0) == 0.0);
  CHECK(round_sig6(65665.666) == 65665.7);
}

TEST_CASE("text files round-trip and report failures") {
  builders::TempDir tmp;
  write_text_file(tmp.file("note.txt"), "hello\nworld\n");
  CHECK(read_text_file(tmp.file("note.txt")) == "hello\nworld\n");
  CHECK_THROWS_AS(read_text_file(tmp.file("missing.txt")), DataError);
  CHECK_THROWS_AS(write_text_file(tmp.file("no/such/dir/x.txt"), "y"), DataError);
}

TEST_CASE("PGM rasters round-trip") {
  builders::TempDir tmp;
  GrayRaster img{3, 2, {0, 50, 100, 150, 200, 255}};
  write_pgm(img, tmp.file("img.pgm"));
  const auto back = read_pgm(tmp.file("img.pgm"));
  CHECK(back.width == 3);
  CHECK(back.height == 2);
  CHECK(back.pixels == img.pixels);
}

TEST_CASE("PPM rasters round-trip") {
  builders::TempDir tmp;
  RgbRaster img{2, 1, {255, 0, 0, 0, 0, 255}};
  write_ppm(img, tmp.file("img.ppm"));
  const auto back = read_ppm(tmp.file("img.ppm"));
  CHECK(back.width == 2);
  CHECK(back.height == 1);
  CHECK(back.data == img.data);
}

TEST_CASE("PNM readers tolerate header comments") {
  builders::TempDir tmp;
  write_text_file(tmp.file("c.pgm"), std::string("P5\n# a comment\n2 1\n255\n") +
                                         std::string("\x10\x20", 2));
  const auto img = read_pgm(tmp.file("c.pgm"));
  CHECK(img.width == 2);
  CHECK(img.pixels == std::vector<std::uint8_t>{0x10, 0x20});
}

TEST_CASE("PNM readers reject wrong magic, maxval and short data") {
  builders::TempDir tmp;
  write_text_file(tmp.file("magic.pgm"), "P6\n1 1\n255\nxxx");
  CHECK_THROWS_AS(read_pgm(tmp.file("magic.pgm")), DataError);
  write_text_file(tmp.file("maxval.pgm"), "P5\n1 1\n65535\n\x10");
  CHECK_THROWS_AS(read_pgm(tmp.file("maxval.pgm")), DataError);
  write_text_file(tmp.file("short.pgm"), "P5\n2 2\n255\nab");
  CHECK_THROWS_AS(read_pgm(tmp.file("short.pgm")), DataError);
}

TEST_CASE("masks convert to rasters and back") {
  const auto mask = make_mask(2, 2, {0, 1, 1, 0});
  const auto raster = mask_to_raster(mask);
  CHECK(raster.pixels == std::vector<std::uint8_t>{0, 255, 255, 0});
  const auto back = raster_to_mask(raster);
  CHECK(back.values == mask.values);
  CHECK(back.shape == mask.shape);
}

TEST_CASE("grid CSV round-trips bit-exactly") {
  const auto grid = make_grid(2, 3, {0.1, 1.0 / 3.0, 8000.0, 61429.17, 5e-324, 1e300});
  const auto parsed = parse_grid_csv(grid_csv(grid));
  CHECK(parsed.shape == grid.shape);
  CHECK(parsed.values_hz == grid.values_hz);
}

TEST_CASE("grid CSV parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_grid_csv("1,2\n3\n"), DataError);
  CHECK_THROWS_AS(parse_grid_csv("1,abc\n"), DataError);
  CHECK_THROWS_AS(parse_grid_csv(""), DataError);
}

TEST_CASE("fnv1a64 matches published test vectors") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("hash_file hashes the file content") {
  builders::TempDir tmp;
  write_text_file(tmp.file("data.bin"), "foobar");
  CHECK(hash_file(tmp.file("data.bin")) == fnv1a64_hex("foobar"));
}

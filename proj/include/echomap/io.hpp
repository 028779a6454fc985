#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "echomap/mapping.hpp"
#include "echomap/render.hpp"

namespace echomap {

// Shortest decimal text that parses back to the same double.
std::string format_exact(double v);
// Fixed 6-significant-digit policy for report files.
std::string format_sig6(double v);
// Rounds to 6 significant digits (for JSON number fields).
double round_sig6(double v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Binary PGM (P5) / PPM (P6), maxval 255.
void write_pgm(const GrayRaster& raster, const std::string& path);
GrayRaster read_pgm(const std::string& path);
void write_ppm(const RgbRaster& raster, const std::string& path);
RgbRaster read_ppm(const std::string& path);

// Mask <-> raster at identical resolution (0 <-> 0, 1 <-> 255).
GrayRaster mask_to_raster(const BinaryMask& mask);
BinaryMask raster_to_mask(const GrayRaster& raster);

// Frequency grid as rows x cols CSV of exact-text Hz values.
std::string grid_csv(const FrequencyGrid& grid);
FrequencyGrid parse_grid_csv(const std::string& text);

// FNV-1a 64-bit content hash, lowercase hex.
std::string fnv1a64_hex(const std::string& bytes);
std::string hash_file(const std::string& path);

}  // namespace echomap

#include "echomap/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "echomap/errors.hpp"

namespace echomap {

std::string format_exact(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string format_sig6(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double round_sig6(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return std::strtod(buf, nullptr);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  out << text;
  if (!out) throw DataError("write failed: " + path);
}

void write_pgm(const GrayRaster& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  if (!out) throw DataError("write failed: " + path);
}

namespace {

// Reads one whitespace-delimited token, skipping `#` comment lines as the
// netpbm format allows.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (!std::isspace(c)) {
      tok.push_back(static_cast<char>(c));
      break;
    }
  }
  while ((c = in.get()) != EOF && !std::isspace(c)) tok.push_back(static_cast<char>(c));
  return tok;
}

void read_pnm_header(std::istream& in, const std::string& path, const char* magic,
                     int& width, int& height) {
  if (next_token(in) != magic) {
    throw DataError(std::string("not a ") + magic + " file: " + path);
  }
  try {
    width = std::stoi(next_token(in));
    height = std::stoi(next_token(in));
    if (std::stoi(next_token(in)) != 255) {
      throw DataError("unsupported maxval (expected 255): " + path);
    }
  } catch (const std::logic_error&) {
    throw DataError("malformed header: " + path);
  }
  if (width < 1 || height < 1) throw DataError("invalid raster dimensions: " + path);
}

}  // namespace

GrayRaster read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  GrayRaster img;
  read_pnm_header(in, path, "P5", img.width, img.height);
  img.pixels.resize(static_cast<std::size_t>(img.width) * img.height);
  in.read(reinterpret_cast<char*>(img.pixels.data()),
          static_cast<std::streamsize>(img.pixels.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.pixels.size())) {
    throw DataError("truncated pixel data: " + path);
  }
  return img;
}

void write_ppm(const RgbRaster& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
  if (!out) throw DataError("write failed: " + path);
}

RgbRaster read_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  RgbRaster img;
  read_pnm_header(in, path, "P6", img.width, img.height);
  img.data.resize(static_cast<std::size_t>(img.width) * img.height * 3);
  in.read(reinterpret_cast<char*>(img.data.data()),
          static_cast<std::streamsize>(img.data.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.data.size())) {
    throw DataError("truncated pixel data: " + path);
  }
  return img;
}

GrayRaster mask_to_raster(const BinaryMask& mask) {
  GrayRaster img;
  img.width = mask.shape.cols;
  img.height = mask.shape.rows;
  img.pixels.resize(mask.values.size());
  for (std::size_t i = 0; i < mask.values.size(); ++i) {
    img.pixels[i] = mask.values[i] == 0 ? 0 : 255;
  }
  return img;
}

BinaryMask raster_to_mask(const GrayRaster& img) {
  BinaryMask mask;
  mask.shape = GridShape{img.height, img.width};
  mask.values.resize(img.pixels.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    // 0 encodes defect; accept any mid-gray as non-defect so hand-edited
    // masks with sloppy values still load.
    mask.values[i] = img.pixels[i] == 0 ? 0 : 1;
  }
  return mask;
}

std::string grid_csv(const FrequencyGrid& grid) {
  std::string text;
  for (int r = 0; r < grid.shape.rows; ++r) {
    for (int c = 0; c < grid.shape.cols; ++c) {
      if (c) text += ",";
      text += format_exact(grid.at(r, c));
    }
    text += "\n";
  }
  return text;
}

FrequencyGrid parse_grid_csv(const std::string& text) {
  FrequencyGrid grid;
  std::istringstream in(text);
  std::string line;
  int cols = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    int n = 0;
    while (std::getline(ls, field, ',')) {
      double v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw DataError("grid csv: bad field '" + field + "'");
      }
      grid.values_hz.push_back(v);
      ++n;
    }
    if (cols < 0) {
      cols = n;
    } else if (n != cols) {
      throw DataError("grid csv: ragged rows");
    }
    ++grid.shape.rows;
  }
  grid.shape.cols = cols < 0 ? 0 : cols;
  if (grid.shape.rows < 1 || grid.shape.cols < 1) throw DataError("grid csv: empty grid");
  return grid;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string hash_file(const std::string& path) {
  return fnv1a64_hex(read_text_file(path));
}

}  // namespace echomap

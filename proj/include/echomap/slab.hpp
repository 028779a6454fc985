#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace echomap {

struct GridShape {
  int rows{0};  // lateral points
  int cols{0};  // longitudinal points

  int cell_count() const { return rows * cols; }
  // Row-major bijection: index = row*cols + col.
  int index_of(int row, int col) const { return row * cols + col; }
  std::array<int, 2> cell_of(int index) const {
    return {index / cols, index % cols};
  }
  bool operator==(const GridShape&) const = default;
};

// One impact-echo waveform recorded at a grid point.
struct TimeSeries {
  double sample_rate_hz{0.0};
  std::vector<double> amplitudes;

  std::size_t size() const { return amplitudes.size(); }
};

// All readings of one slab, row-major (row 0 first, columns left to right).
struct SlabRecording {
  std::string slab_id;
  GridShape shape;
  std::vector<TimeSeries> readings;
  std::optional<std::array<double, 2>> cell_size_m;  // (dx, dy), metadata only

  const TimeSeries& at(int row, int col) const {
    return readings[static_cast<std::size_t>(shape.index_of(row, col))];
  }
};

// Parses and validates a slab JSON file. Throws DataError on any violation.
SlabRecording load_slab(const std::string& path);

// Writes the slab JSON format; amplitudes round-trip bit-exactly.
void write_slab(const SlabRecording& rec, const std::string& path);

// Returns every violated invariant, naming the first offending cell.
// An empty result means the recording is valid.
std::vector<std::string> validate(const SlabRecording& rec);

}  // namespace echomap

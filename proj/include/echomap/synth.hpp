#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "echomap/groundtruth.hpp"
#include "echomap/slab.hpp"

namespace echomap {

// Grid-cell rectangle: `rows` x `cols` cells anchored at (row, col).
struct CellRect {
  int row{0};
  int col{0};
  int rows{0};
  int cols{0};
};

struct SynthConfig {
  GridShape shape{9, 28};
  double sample_rate_hz{500000.0};
  int n_samples{2000};
  double defect_band_hz[2]{8000.0, 10000.0};
  double intact_band_hz[2]{58000.0, 70000.0};
  double decay_tau_s{0.0005};
  double noise_sigma{0.0};
  std::uint64_t seed{1};
  bool snap_tones{true};
  // nullopt -> default layout for the shape; an empty list plants nothing.
  std::optional<std::vector<CellRect>> defects;
  std::string slab_id;  // empty -> "synth-seed<seed>"
};

// Nearest spectrum bin center k*fs/n to f, ties to the lower bin.
// Throws DataError outside (0, Nyquist).
double snap_to_bin(double f_hz, double sample_rate_hz, int n_samples);

// Proportional default defect layout (a few rectangles), valid for any
// grid with rows >= 3 and cols >= 4.
std::vector<CellRect> default_defect_layout(const GridShape& shape);

// Seeded generator: per cell, a damped sinusoid exp(-t/tau)*sin(2*pi*f*t)
// plus white gaussian noise. Tone frequency is drawn uniformly from the
// defect band inside defect rectangles, the intact band elsewhere, then
// snapped to the nearest spectrum bin (unless snap_tones is off). The
// returned DefectSpec rasterizes to exactly the planted cells at grid
// resolution.
std::pair<SlabRecording, DefectSpec> generate_slab(const SynthConfig& cfg);

}  // namespace echomap

#pragma once

#include <vector>

#include "echomap/adaptive.hpp"
#include "echomap/dsp.hpp"
#include "echomap/slab.hpp"

namespace echomap {

// Per-cell dominant frequencies, row-major.
struct FrequencyGrid {
  GridShape shape;
  std::vector<double> values_hz;

  double at(int row, int col) const {
    return values_hz[static_cast<std::size_t>(shape.index_of(row, col))];
  }
};

// Pass 1: per cell, normalize -> detrended spectrum -> dominant frequency
// over the full positive spectrum (DC excluded). Feeds the histogram that
// defines the slab's frequency ranges.
FrequencyGrid global_frequency_grid(const SlabRecording& rec);

// Pass 2: dominant frequency restricted to the identified low range.
// Feeds contour rendering, binary masking and clustering.
FrequencyGrid low_band_frequency_grid(const SlabRecording& rec, const RangePair& pair);

// Shared kernel for both passes when the spectra are already at hand.
FrequencyGrid frequency_grid_from_spectra(const GridShape& shape,
                                          const std::vector<Spectrum>& spectra,
                                          const std::optional<FrequencyRange>& band);

// One detrended spectrum per cell of the normalized readings, row-major.
std::vector<Spectrum> cell_spectra(const SlabRecording& rec);

}  // namespace echomap

#pragma once

#include <optional>
#include <vector>

#include "echomap/slab.hpp"

namespace echomap {

// Positive-frequency magnitude spectrum. Bin k sits at k*fs/N for
// k = 0..floor(N/2); freqs[0] is always the DC bin.
struct Spectrum {
  std::vector<double> freqs_hz;
  std::vector<double> mags;

  std::size_t size() const { return freqs_hz.size(); }
};

// [f_start, f_end] interval, optionally carrying the histogram bins it
// was derived from (b_start/b_end are -1 for free-standing ranges).
struct FrequencyRange {
  double f_start_hz{0.0};
  double f_end_hz{0.0};
  int b_start{-1};
  int b_end{-1};

  bool contains(double f_hz) const {
    return f_start_hz <= f_hz && f_hz <= f_end_hz;
  }
};

// Min-max normalization to [0,1]. A constant signal maps to all zeros so
// batch runs stay total over dead channels. Sample rate is preserved.
TimeSeries normalize(const TimeSeries& ts);

// Positive-frequency magnitude spectrum of the (optionally mean-removed)
// signal, computed at the native length. Throws DataError for length < 2.
Spectrum compute_spectrum(const TimeSeries& ts, bool detrend = true);

// Bin-center frequency of maximal magnitude, restricted to `range` when
// given (closed interval on bin centers). Ties go to the lower frequency.
// Throws MethodError when no candidate bin exists.
double dominant_frequency(const Spectrum& sp,
                          const std::optional<FrequencyRange>& range = std::nullopt,
                          bool exclude_dc = true);

}  // namespace echomap

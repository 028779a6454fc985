#include "echomap/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "echomap/errors.hpp"
#include "echomap/fft.hpp"

namespace echomap {

TimeSeries normalize(const TimeSeries& ts) {
  TimeSeries out;
  out.sample_rate_hz = ts.sample_rate_hz;
  out.amplitudes.resize(ts.amplitudes.size());
  if (ts.amplitudes.empty()) return out;

  const auto [lo_it, hi_it] = std::minmax_element(ts.amplitudes.begin(), ts.amplitudes.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (lo == hi) {
    std::fill(out.amplitudes.begin(), out.amplitudes.end(), 0.0);
    return out;
  }
  const double span = hi - lo;
  std::transform(ts.amplitudes.begin(), ts.amplitudes.end(), out.amplitudes.begin(),
                 [&](double a) { return (a - lo) / span; });
  return out;
}

Spectrum compute_spectrum(const TimeSeries& ts, bool detrend) {
  const std::size_t n = ts.amplitudes.size();
  if (n < 2) throw DataError("spectrum: need at least 2 samples");

  std::vector<std::complex<double>> buf(n);
  double mean = 0.0;
  if (detrend) {
    mean = std::accumulate(ts.amplitudes.begin(), ts.amplitudes.end(), 0.0) /
           static_cast<double>(n);
  }
  for (std::size_t i = 0; i < n; ++i) buf[i] = ts.amplitudes[i] - mean;

  const auto full = dft(buf);
  const std::size_t half = n / 2;

  Spectrum sp;
  sp.freqs_hz.resize(half + 1);
  sp.mags.resize(half + 1);
  for (std::size_t k = 0; k <= half; ++k) {
    sp.freqs_hz[k] = static_cast<double>(k) * ts.sample_rate_hz / static_cast<double>(n);
    sp.mags[k] = std::abs(full[k]);
  }
  return sp;
}

double dominant_frequency(const Spectrum& sp, const std::optional<FrequencyRange>& range,
                          bool exclude_dc) {
  int best = -1;
  double best_mag = 0.0;
  for (std::size_t k = exclude_dc ? 1u : 0u; k < sp.size(); ++k) {
    if (range && !range->contains(sp.freqs_hz[k])) continue;
    // Strict comparison keeps ties at the lower frequency.
    if (best < 0 || sp.mags[k] > best_mag) {
      best = static_cast<int>(k);
      best_mag = sp.mags[k];
    }
  }
  if (best < 0) {
    throw MethodError("dominant_frequency: no spectrum bins inside the requested range");
  }
  return sp.freqs_hz[static_cast<std::size_t>(best)];
}

}  // namespace echomap

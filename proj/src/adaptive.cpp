#include "echomap/adaptive.hpp"

#include <algorithm>
#include <cmath>

#include "echomap/errors.hpp"

namespace echomap {

namespace {

// Ceiling that forgives the tiny downward error pow/sqrt can introduce on
// values that are mathematically integral (e.g. 1000^(2/3) = 100).
long long snapped_ceil(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) < 1e-9 * std::max(1.0, std::abs(nearest))) {
    return static_cast<long long>(nearest);
  }
  return static_cast<long long>(std::ceil(x));
}

}  // namespace

int bin_count(long long n, const ThresholdConfig& cfg) {
  if (n < 1) throw DataError("bin_count: need at least one observation");
  const double nd = static_cast<double>(n);
  const long long exponential = snapped_ceil(std::pow(nd, 1.0 / cfg.exponent));
  const long long adjusted = snapped_ceil(cfg.multiplier * std::sqrt(nd));
  // Outer ceiling of the mean, done in integer arithmetic: ceil((a+b)/2).
  return static_cast<int>((exponential + adjusted + 1) / 2);
}

FrequencyHistogram build_histogram(const std::vector<double>& freqs, int k) {
  if (freqs.empty()) throw DataError("build_histogram: empty input");
  if (k < 1) throw DataError("build_histogram: bin count must be positive");

  const auto [lo, hi] = std::minmax_element(freqs.begin(), freqs.end());
  FrequencyHistogram h;
  h.f_min_hz = *lo;
  h.f_max_hz = *hi;
  h.k = k;
  h.n_total = static_cast<long long>(freqs.size());
  if (!(h.f_max_hz > h.f_min_hz)) {
    throw MethodError("build_histogram: degenerate distribution (all frequencies identical)");
  }
  h.delta_f_hz = (h.f_max_hz - h.f_min_hz) / k;

  h.counts.assign(static_cast<std::size_t>(k), 0);
  for (double f : freqs) {
    int b = static_cast<int>(std::floor((f - h.f_min_hz) / h.delta_f_hz));
    // The final bin is closed on the right so f_max lands in bin k-1.
    b = std::clamp(b, 0, k - 1);
    ++h.counts[static_cast<std::size_t>(b)];
  }

  h.densities.resize(static_cast<std::size_t>(k));
  const double norm = static_cast<double>(h.n_total) * h.delta_f_hz;
  for (int b = 0; b < k; ++b) {
    h.densities[static_cast<std::size_t>(b)] =
        static_cast<double>(h.counts[static_cast<std::size_t>(b)]) / norm;
  }
  return h;
}

std::vector<FrequencyRange> identify_ranges(const FrequencyHistogram& h) {
  std::vector<FrequencyRange> ranges;
  int b = 0;
  while (b < h.k) {
    if (h.counts[static_cast<std::size_t>(b)] == 0) {
      ++b;
      continue;
    }
    FrequencyRange r;
    r.b_start = b;
    while (b < h.k && h.counts[static_cast<std::size_t>(b)] > 0) ++b;
    r.b_end = b - 1;
    r.f_start_hz = h.bin_left(r.b_start);
    r.f_end_hz = h.bin_right(r.b_end);
    ranges.push_back(r);
  }
  return ranges;
}

RangePair classify_ranges(const std::vector<FrequencyRange>& ranges) {
  if (ranges.empty()) throw DataError("classify_ranges: no ranges");
  if (ranges.size() == 1) {
    throw MethodError("classify_ranges: no frequency separation");
  }
  return RangePair{ranges.front(), ranges.back()};
}

}  // namespace echomap

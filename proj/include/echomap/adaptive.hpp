#pragma once

#include <vector>

#include "echomap/dsp.hpp"

namespace echomap {

struct ThresholdConfig {
  double exponent{1.5};    // exponential rule: ceil(n^(1/exponent))
  double multiplier{1.5};  // adjusted square root rule: ceil(multiplier*sqrt(n))
};

struct FrequencyHistogram {
  double f_min_hz{0.0};
  double f_max_hz{0.0};
  int k{0};                 // bin count
  double delta_f_hz{0.0};   // (f_max - f_min) / k
  long long n_total{0};     // number of observations
  std::vector<long long> counts;
  std::vector<double> densities;  // H(b) = counts[b] / (n_total * delta_f)

  double bin_left(int b) const { return f_min_hz + b * delta_f_hz; }
  double bin_right(int b) const { return f_min_hz + (b + 1) * delta_f_hz; }
};

// Low (defect-indicative) and high (intact-indicative) frequency ranges.
struct RangePair {
  FrequencyRange low;
  FrequencyRange high;
};

// Combined bin count: ceil of the mean of the exponential rule and the
// adjusted square root rule. Throws DataError for n = 0.
int bin_count(long long n, const ThresholdConfig& cfg = {});

// Histogram over k equal-width bins spanning [min(freqs), max(freqs)].
// Bins are half-open on the right except the final bin, which is closed
// so the maximum is counted. Throws MethodError("degenerate distribution")
// when all frequencies coincide.
FrequencyHistogram build_histogram(const std::vector<double>& freqs_hz, int k);

// Maximal runs of consecutive nonzero bins, ascending. Each run b_s..b_e
// maps to [f_min + b_s*delta_f, f_min + (b_e+1)*delta_f].
std::vector<FrequencyRange> identify_ranges(const FrequencyHistogram& h);

// low = first identified range, high = last. Middle ranges are ignored
// here but kept in diagnostics. A single range means the defect/intact
// separation premise failed: MethodError("no frequency separation").
RangePair classify_ranges(const std::vector<FrequencyRange>& ranges);

}  // namespace echomap

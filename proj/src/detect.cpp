#include "echomap/detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "echomap/errors.hpp"

namespace echomap {

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

// Within-segment sum of squared deviations for sorted[i..j) given prefix
// sums, via sumsq - sum^2/len. Cancellation makes this noisy near zero
// (tight segments of large values), which is harmless for comparing splits
// against each other but not good enough to report, so the chosen
// partition's cost is recomputed two-pass below.
double segment_sse(const std::vector<double>& prefix, const std::vector<double>& prefix_sq,
                   std::size_t i, std::size_t j) {
  const double sum = prefix[j] - prefix[i];
  const double sumsq = prefix_sq[j] - prefix_sq[i];
  const auto len = static_cast<double>(j - i);
  const double sse = sumsq - sum * sum / len;
  return sse > 0.0 ? sse : 0.0;  // clamp the FP residue of a perfect fit
}

double twopass_sse(const std::vector<double>& sorted, std::size_t i, std::size_t j) {
  double mean = 0.0;
  for (std::size_t t = i; t < j; ++t) mean += sorted[t];
  mean /= static_cast<double>(j - i);
  double acc = 0.0;
  for (std::size_t t = i; t < j; ++t) acc += (sorted[t] - mean) * (sorted[t] - mean);
  return acc;
}

}  // namespace

std::pair<BinaryMask, double> binary_mask(const FrequencyGrid& grid) {
  if (grid.values_hz.empty()) throw DataError("binary_mask: empty grid");
  const double threshold = median(grid.values_hz);
  BinaryMask mask;
  mask.shape = grid.shape;
  mask.values.reserve(grid.values_hz.size());
  for (double f : grid.values_hz) {
    mask.values.push_back(f < threshold ? 0 : 1);
  }
  return {std::move(mask), threshold};
}

ClusterModel kmeans_1d(const std::vector<double>& values, int k, std::uint64_t /*seed*/) {
  if (values.empty()) throw DataError("kmeans_1d: empty input");
  if (k < 1) throw DataError("kmeans_1d: cluster count must be positive");
  if (k > 2) throw DataError("kmeans_1d: only K <= 2 is supported");

  const std::size_t n = values.size();
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());

  std::vector<double> prefix(n + 1, 0.0), prefix_sq(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    prefix[i + 1] = prefix[i] + sorted[i];
    prefix_sq[i + 1] = prefix_sq[i] + sorted[i] * sorted[i];
  }

  ClusterModel model;
  model.k = k;

  if (k == 1) {
    model.centroids_hz = {prefix[n] / static_cast<double>(n)};
    model.labels.assign(n, 0);
    model.sizes = {static_cast<long long>(n)};
    model.defect_label = 0;
    model.cost = twopass_sse(sorted, 0, n);
    return model;
  }

  if (sorted.front() == sorted.back()) {
    throw MethodError("kmeans_1d: insufficient distinct values");
  }

  // The optimal 2-means partition of 1-D data is a contiguous split of the
  // sorted values, so scan every split that falls between distinct values.
  // Equal values never separate (assignment must be value-determined), and
  // cost ties resolve toward the larger low cluster so boundary points land
  // with the lower centroid.
  std::size_t best_split = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t s = 1; s < n; ++s) {
    if (sorted[s - 1] == sorted[s]) continue;
    const double cost =
        segment_sse(prefix, prefix_sq, 0, s) + segment_sse(prefix, prefix_sq, s, n);
    if (cost <= best_cost) {
      best_cost = cost;
      best_split = s;
    }
  }

  const double boundary = sorted[best_split];  // first value of the high cluster
  model.centroids_hz = {prefix[best_split] / static_cast<double>(best_split),
                        (prefix[n] - prefix[best_split]) /
                            static_cast<double>(n - best_split)};
  model.labels.reserve(n);
  for (double v : values) model.labels.push_back(v < boundary ? 0 : 1);
  model.sizes = {static_cast<long long>(best_split),
                 static_cast<long long>(n - best_split)};
  model.defect_label = 0;
  model.cost = twopass_sse(sorted, 0, best_split) + twopass_sse(sorted, best_split, n);
  return model;
}

std::pair<BinaryMask, ClusterModel> cluster_map(const FrequencyGrid& grid,
                                                std::uint64_t seed) {
  if (grid.values_hz.empty()) throw DataError("cluster_map: empty grid");
  ClusterModel model = kmeans_1d(grid.values_hz, 2, seed);
  BinaryMask mask;
  mask.shape = grid.shape;
  mask.values.reserve(model.labels.size());
  for (int label : model.labels) {
    mask.values.push_back(label == model.defect_label ? 0 : 1);
  }
  return {std::move(mask), std::move(model)};
}

}  // namespace echomap

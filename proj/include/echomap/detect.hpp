#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "echomap/mapping.hpp"

namespace echomap {

// 2-D grid over {0,1}: 0 = defect, 1 = non-defect.
struct BinaryMask {
  GridShape shape;
  std::vector<std::uint8_t> values;

  std::uint8_t at(int row, int col) const {
    return values[static_cast<std::size_t>(shape.index_of(row, col))];
  }
};

struct ClusterModel {
  int k{0};
  std::vector<double> centroids_hz;  // one per cluster
  std::vector<int> labels;           // row-major cell labels
  std::vector<long long> sizes;      // cells per cluster
  int defect_label{0};               // cluster with the minimal centroid
  double cost{0.0};                  // sum of squared distances to centroids
};

// Median-threshold mask: defect (0) where f(x,y) < median, else 1. Even
// counts take the mean of the two middle order statistics. Cells exactly
// at the threshold are non-defect.
std::pair<BinaryMask, double> binary_mask(const FrequencyGrid& grid);

// 1-D k-means. K = 2 returns the exact minimizer of the within-cluster
// variance, found over contiguous splits of the sorted values; K = 1 is
// the trivial single cluster. Deterministic; the seed parameter is
// reserved for K > 2 extensions. Throws MethodError("insufficient
// distinct values") when K exceeds the number of distinct values.
ClusterModel kmeans_1d(const std::vector<double>& values, int k, std::uint64_t seed = 0);

// K = 2 clustering of all grid values; mask is 0 where a cell's label is
// the defect (lowest-centroid) cluster.
std::pair<BinaryMask, ClusterModel> cluster_map(const FrequencyGrid& grid,
                                                std::uint64_t seed = 0);

}  // namespace echomap

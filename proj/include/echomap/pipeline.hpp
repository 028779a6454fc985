#pragma once

#include <optional>
#include <string>
#include <vector>

#include "echomap/adaptive.hpp"
#include "echomap/detect.hpp"
#include "echomap/evaluate.hpp"
#include "echomap/mapping.hpp"
#include "echomap/render.hpp"
#include "echomap/slab.hpp"

namespace echomap {

inline constexpr const char* kVersion = "0.1.0";

struct RenderOptions {
  int upscale{10};
  bool smooth{false};
  double overlay_alpha{0.5};
};

// Everything one slab analysis produces, in memory.
struct AnalysisResult {
  std::string slab_id;
  FrequencyGrid global_grid;   // pass 1
  FrequencyHistogram histogram;
  std::vector<FrequencyRange> ranges;
  RangePair pair;
  FrequencyGrid low_grid;      // pass 2
  BinaryMask binary;           // median-threshold mask
  double threshold_hz{0.0};
  BinaryMask cluster;          // k-means mask
  ClusterModel model;
};

// Full detection pipeline: pass 1 -> adaptive thresholding -> pass 2 ->
// binary mask + cluster map. Spectra are computed once and reused by both
// passes. Throws MethodError when thresholding cannot separate bands.
AnalysisResult analyze(const SlabRecording& rec, const ThresholdConfig& cfg = {},
                       std::uint64_t seed = 0);

// Both mask evaluations for one slab (binary, cluster) plus the ROC curve.
struct EvaluationResult {
  MetricsReport binary;
  MetricsReport cluster;
  RocResult roc;
  GroundTruthMask gtm;
};

EvaluationResult evaluate_analysis(const AnalysisResult& analysis,
                                   const DefectSpec& spec);

// -- deterministic report emission -----------------------------------------

// Histogram + identified ranges as a JSON report (render consumes this for
// histogram plots).
std::string histogram_report_json(const AnalysisResult& a);
// gnuplot-friendly: bin_left,bin_right,count,density
std::string histogram_csv(const FrequencyHistogram& h);
// threshold,fpr,tpr rows; infinite thresholds spelled -inf / inf
std::string roc_csv(const RocCurve& curve);
// Cluster model summary (centroids, sizes, cost) plus the median threshold.
std::string cluster_report_json(const AnalysisResult& a);
std::string metrics_json(const std::string& slab_id, const std::string& mask_type,
                         const MetricsReport& report);

struct FileArtifact {
  std::string name;
  std::string path;   // relative to the manifest
  std::string hash;   // fnv1a64 of the bytes
};

struct ManifestInputs {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // (role, path)
  ThresholdConfig threshold;
  RenderOptions render;
  std::uint64_t seed{0};
};

std::string manifest_json(const ManifestInputs& inputs,
                          const std::optional<AnalysisResult>& analysis,
                          const std::vector<FileArtifact>& artifacts);

}  // namespace echomap

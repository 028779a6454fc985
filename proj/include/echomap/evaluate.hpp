#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "echomap/groundtruth.hpp"

namespace echomap {

struct ConfusionCounts {
  long long tp{0};  // dm=0 and gtm=0
  long long fp{0};  // dm=0 and gtm=1
  long long fn{0};  // dm=1 and gtm=0
  long long tn{0};  // dm=1 and gtm=1

  long long total() const { return tp + fp + fn + tn; }
};

// Eight paper metrics over the defect class. 0/0 cases are reported as
// an explicit "undefined" sentinel (nullopt), never silently as 0 or 1.
struct MetricsReport {
  std::optional<double> iou;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
  std::optional<double> fnr;
  std::optional<double> fpr;
  std::optional<double> tnr;
  std::optional<double> auc_roc;
  ConfusionCounts confusion;
};

struct RocPoint {
  double threshold_hz{0.0};  // classify defect where f <= threshold
  double fpr{0.0};
  double tpr{0.0};
};

struct RocCurve {
  std::vector<RocPoint> points;  // monotone in fpr, (0,0) .. (1,1)
};

struct RocResult {
  RocCurve curve;
  std::optional<double> auc;  // nullopt when the GTM is single-class
};

// Pixel-wise confusion with the 0 = defect convention. Throws DataError
// on dimension mismatch.
ConfusionCounts confusion(const BinaryMask& dm, const BinaryMask& gtm);

// Confusion-based metrics; auc_roc is left unset.
MetricsReport compute_metrics(const ConfusionCounts& c);

// ROC over defect scores -f(x,y): thresholds sweep all unique frequencies
// plus -inf/+inf sentinels; AUC by trapezoidal integration. gtm must share
// the grid's dimensions.
RocResult roc_auc(const FrequencyGrid& score_grid, const BinaryMask& gtm);

// Full per-slab evaluation: aligns dm to the GTM raster for the confusion
// metrics, computes AUC from the score grid against the majority-vote
// grid-resolution GTM.
MetricsReport evaluate_slab(const BinaryMask& dm, const FrequencyGrid& score_grid,
                            const GroundTruthMask& gtm);

}  // namespace echomap

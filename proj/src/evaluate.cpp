#include "echomap/evaluate.hpp"

#include <algorithm>
#include <limits>

#include "echomap/errors.hpp"

namespace echomap {

namespace {

std::optional<double> ratio(long long num, long long den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

ConfusionCounts confusion(const BinaryMask& dm, const BinaryMask& gtm) {
  if (!(dm.shape == gtm.shape)) {
    throw DataError("confusion: mask dimensions differ");
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < dm.values.size(); ++i) {
    const bool d = dm.values[i] == 0;
    const bool g = gtm.values[i] == 0;
    if (d && g)
      ++c.tp;
    else if (d && !g)
      ++c.fp;
    else if (!d && g)
      ++c.fn;
    else
      ++c.tn;
  }
  return c;
}

MetricsReport compute_metrics(const ConfusionCounts& c) {
  MetricsReport m;
  m.confusion = c;
  m.iou = ratio(c.tp, c.tp + c.fp + c.fn);
  m.precision = ratio(c.tp, c.tp + c.fp);
  m.recall = ratio(c.tp, c.tp + c.fn);
  // F1 as 2tp/(2tp+fp+fn) is algebraically 2PR/(P+R) but avoids compounding
  // two rounded divisions. The harmonic mean is 0/0 when either rate is
  // undefined or both are zero (tp = 0 forces P = R = 0).
  if (m.precision && m.recall && c.tp > 0) {
    m.f1 = static_cast<double>(2 * c.tp) / static_cast<double>(2 * c.tp + c.fp + c.fn);
  }
  // Complements are computed as 1 - rate so recall + fnr and tnr + fpr sum
  // to 1.0 exactly in floating point.
  if (m.recall) m.fnr = 1.0 - *m.recall;
  m.fpr = ratio(c.fp, c.fp + c.tn);
  if (m.fpr) m.tnr = 1.0 - *m.fpr;
  return m;
}

RocResult roc_auc(const FrequencyGrid& score_grid, const BinaryMask& gtm) {
  if (!(score_grid.shape == gtm.shape)) {
    throw DataError("roc_auc: grid and mask dimensions differ");
  }
  const std::size_t n = score_grid.values_hz.size();
  long long n_defect = 0;
  for (auto v : gtm.values) n_defect += v == 0 ? 1 : 0;
  const long long n_intact = static_cast<long long>(n) - n_defect;

  RocResult result;
  if (n_defect == 0 || n_intact == 0) {
    return result;  // single-class ground truth: curve empty, auc undefined
  }

  // Sort cells by frequency so one ascending sweep of the Hz cutoff
  // (defect iff f <= cutoff) accumulates the confusion at each threshold.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return score_grid.values_hz[a] < score_grid.values_hz[b];
  });

  const double inf = std::numeric_limits<double>::infinity();
  result.curve.points.push_back({-inf, 0.0, 0.0});

  long long tp = 0, fp = 0;
  std::size_t i = 0;
  while (i < n) {
    const double f = score_grid.values_hz[order[i]];
    while (i < n && score_grid.values_hz[order[i]] == f) {
      if (gtm.values[order[i]] == 0)
        ++tp;
      else
        ++fp;
      ++i;
    }
    result.curve.points.push_back({f, static_cast<double>(fp) / n_intact,
                                   static_cast<double>(tp) / n_defect});
  }
  result.curve.points.push_back({inf, 1.0, 1.0});

  double auc = 0.0;
  for (std::size_t p = 1; p < result.curve.points.size(); ++p) {
    const auto& a = result.curve.points[p - 1];
    const auto& b = result.curve.points[p];
    auc += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0;
  }
  result.auc = auc;
  return result;
}

MetricsReport evaluate_slab(const BinaryMask& dm, const FrequencyGrid& score_grid,
                            const GroundTruthMask& gtm) {
  const auto [dm_up, gtm_px] = align_masks(dm, gtm);
  MetricsReport m = compute_metrics(confusion(dm_up, gtm_px));
  const BinaryMask gtm_grid = downsample_majority(gtm.mask, score_grid.shape);
  m.auc_roc = roc_auc(score_grid, gtm_grid).auc;
  return m;
}

}  // namespace echomap

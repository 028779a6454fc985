#include "echomap/pipeline.hpp"

#include <cmath>

#include "json.hpp"

#include "echomap/io.hpp"

namespace echomap {

namespace {

using json = nlohmann::ordered_json;

// Reports round to 6 significant digits (reproducible diffs); data files
// that must round-trip bit-exactly use format_exact instead.
json num(double v) { return round_sig6(v); }

json opt_num(const std::optional<double>& v) {
  if (!v) return nullptr;
  return num(*v);
}

json range_json(const FrequencyRange& r) {
  json j;
  j["f_start_hz"] = num(r.f_start_hz);
  j["f_end_hz"] = num(r.f_end_hz);
  j["b_start"] = r.b_start;
  j["b_end"] = r.b_end;
  return j;
}

}  // namespace

AnalysisResult analyze(const SlabRecording& rec, const ThresholdConfig& cfg,
                       std::uint64_t seed) {
  AnalysisResult a;
  a.slab_id = rec.slab_id;

  const std::vector<Spectrum> spectra = cell_spectra(rec);
  a.global_grid = frequency_grid_from_spectra(rec.shape, spectra, std::nullopt);

  const int k = bin_count(static_cast<long long>(a.global_grid.values_hz.size()), cfg);
  a.histogram = build_histogram(a.global_grid.values_hz, k);
  a.ranges = identify_ranges(a.histogram);
  a.pair = classify_ranges(a.ranges);

  a.low_grid = frequency_grid_from_spectra(rec.shape, spectra, a.pair.low);
  auto [mask, threshold] = binary_mask(a.low_grid);
  a.binary = std::move(mask);
  a.threshold_hz = threshold;
  auto [cmask, model] = cluster_map(a.low_grid, seed);
  a.cluster = std::move(cmask);
  a.model = std::move(model);
  return a;
}

EvaluationResult evaluate_analysis(const AnalysisResult& analysis,
                                   const DefectSpec& spec) {
  EvaluationResult e;
  e.gtm = rasterize_gtm(spec);
  e.binary = evaluate_slab(analysis.binary, analysis.low_grid, e.gtm);
  e.cluster = evaluate_slab(analysis.cluster, analysis.low_grid, e.gtm);
  e.roc = roc_auc(analysis.low_grid,
                  downsample_majority(e.gtm.mask, analysis.low_grid.shape));
  return e;
}

std::string histogram_report_json(const AnalysisResult& a) {
  const FrequencyHistogram& h = a.histogram;
  json doc;
  doc["slab_id"] = a.slab_id;
  doc["n"] = h.n_total;
  doc["k"] = h.k;
  doc["f_min_hz"] = num(h.f_min_hz);
  doc["f_max_hz"] = num(h.f_max_hz);
  doc["delta_f_hz"] = num(h.delta_f_hz);
  doc["counts"] = h.counts;
  json densities = json::array();
  for (double d : h.densities) densities.push_back(num(d));
  doc["densities"] = std::move(densities);
  json ranges = json::array();
  for (const auto& r : a.ranges) ranges.push_back(range_json(r));
  doc["ranges"] = std::move(ranges);
  doc["low_range"] = range_json(a.pair.low);
  doc["high_range"] = range_json(a.pair.high);
  return doc.dump(2) + "\n";
}

std::string histogram_csv(const FrequencyHistogram& h) {
  std::string text = "bin_left_hz,bin_right_hz,count,density\n";
  for (int b = 0; b < h.k; ++b) {
    text += format_sig6(h.bin_left(b));
    text += ",";
    text += format_sig6(h.bin_right(b));
    text += ",";
    text += std::to_string(h.counts[static_cast<std::size_t>(b)]);
    text += ",";
    text += format_sig6(h.densities[static_cast<std::size_t>(b)]);
    text += "\n";
  }
  return text;
}

std::string roc_csv(const RocCurve& curve) {
  std::string text = "threshold_hz,fpr,tpr\n";
  for (const auto& p : curve.points) {
    text += format_sig6(p.threshold_hz);
    text += ",";
    text += format_sig6(p.fpr);
    text += ",";
    text += format_sig6(p.tpr);
    text += "\n";
  }
  return text;
}

std::string cluster_report_json(const AnalysisResult& a) {
  json doc;
  doc["slab_id"] = a.slab_id;
  doc["median_threshold_hz"] = num(a.threshold_hz);
  doc["k"] = a.model.k;
  json centroids = json::array();
  for (double c : a.model.centroids_hz) centroids.push_back(num(c));
  doc["centroids_hz"] = std::move(centroids);
  doc["sizes"] = a.model.sizes;
  doc["defect_label"] = a.model.defect_label;
  doc["cost"] = num(a.model.cost);
  return doc.dump(2) + "\n";
}

std::string metrics_json(const std::string& slab_id, const std::string& mask_type,
                         const MetricsReport& report) {
  json doc;
  doc["slab_id"] = slab_id;
  doc["mask_type"] = mask_type;
  doc["iou"] = opt_num(report.iou);
  doc["precision"] = opt_num(report.precision);
  doc["recall"] = opt_num(report.recall);
  doc["f1"] = opt_num(report.f1);
  doc["fnr"] = opt_num(report.fnr);
  doc["fpr"] = opt_num(report.fpr);
  doc["tnr"] = opt_num(report.tnr);
  doc["auc_roc"] = opt_num(report.auc_roc);
  json confusion;
  confusion["tp"] = report.confusion.tp;
  confusion["fp"] = report.confusion.fp;
  confusion["fn"] = report.confusion.fn;
  confusion["tn"] = report.confusion.tn;
  doc["confusion"] = std::move(confusion);
  return doc.dump(2) + "\n";
}

std::string manifest_json(const ManifestInputs& inputs,
                          const std::optional<AnalysisResult>& analysis,
                          const std::vector<FileArtifact>& artifacts) {
  json doc;
  doc["tool"] = "echomap";
  doc["version"] = kVersion;
  doc["command"] = inputs.command;
  doc["seed"] = inputs.seed;

  json in = json::array();
  for (const auto& [role, path] : inputs.inputs) {
    json entry;
    entry["role"] = role;
    entry["path"] = path;
    entry["fnv1a64"] = hash_file(path);
    in.push_back(std::move(entry));
  }
  doc["inputs"] = std::move(in);

  json config;
  config["threshold"]["exponent"] = num(inputs.threshold.exponent);
  config["threshold"]["multiplier"] = num(inputs.threshold.multiplier);
  config["render"]["upscale"] = inputs.render.upscale;
  config["render"]["smooth"] = inputs.render.smooth;
  config["render"]["overlay_alpha"] = num(inputs.render.overlay_alpha);
  doc["config"] = std::move(config);

  if (analysis) {
    json a;
    a["slab_id"] = analysis->slab_id;
    a["cells"] = analysis->histogram.n_total;
    a["bin_count"] = analysis->histogram.k;
    a["low_range"] = range_json(analysis->pair.low);
    a["high_range"] = range_json(analysis->pair.high);
    a["median_threshold_hz"] = num(analysis->threshold_hz);
    json cluster;
    json centroids = json::array();
    for (double c : analysis->model.centroids_hz) centroids.push_back(num(c));
    cluster["centroids_hz"] = std::move(centroids);
    cluster["sizes"] = analysis->model.sizes;
    cluster["defect_label"] = analysis->model.defect_label;
    cluster["cost"] = num(analysis->model.cost);
    a["cluster"] = std::move(cluster);
    doc["analysis"] = std::move(a);
  }

  json arts = json::array();
  for (const auto& f : artifacts) {
    json entry;
    entry["name"] = f.name;
    entry["path"] = f.path;
    entry["fnv1a64"] = f.hash;
    arts.push_back(std::move(entry));
  }
  doc["artifacts"] = std::move(arts);
  return doc.dump(2) + "\n";
}

}  // namespace echomap

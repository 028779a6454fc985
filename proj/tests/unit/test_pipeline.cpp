#include <doctest.h>

#include <string>
#include <vector>

#include "json.hpp"

#include "echomap/detect.hpp"
#include "echomap/errors.hpp"
#include "echomap/io.hpp"
#include "echomap/pipeline.hpp"
#include "echomap/synth.hpp"
#include "support/builders.hpp"

using namespace echomap;
using json = nlohmann::json;

namespace {

AnalysisResult default_analysis() {
  SynthConfig cfg;  // 9x28, zero noise, default layout, seed 1
  const auto [rec, spec] = generate_slab(cfg);
  return analyze(rec);
}

}  // namespace

TEST_CASE("analyze wires the stages together consistently") {
  SynthConfig cfg;
  const auto [rec, spec] = generate_slab(cfg);
  const auto a = analyze(rec);

  CHECK(a.slab_id == rec.slab_id);
  CHECK(a.histogram.k == bin_count(static_cast<long long>(rec.readings.size())));
  CHECK(a.pair.low.f_end_hz < a.pair.high.f_start_hz);
  CHECK(a.ranges.size() >= 2);

  for (double v : a.low_grid.values_hz) {
    CHECK(v >= a.pair.low.f_start_hz);
    CHECK(v <= a.pair.low.f_end_hz);
  }

  const auto [mask, threshold] = binary_mask(a.low_grid);
  CHECK(a.binary.values == mask.values);
  CHECK(a.threshold_hz == threshold);
  const auto [cmask, model] = cluster_map(a.low_grid);
  CHECK(a.cluster.values == cmask.values);
  CHECK(a.model.centroids_hz == model.centroids_hz);

  const auto ev = evaluate_analysis(a, spec);
  CHECK(*ev.binary.f1 == 1.0);
  CHECK(*ev.cluster.f1 == 1.0);
  CHECK(*ev.binary.auc_roc == 1.0);
}

TEST_CASE("analyze fails cleanly on a constant-tone slab") {
  const auto rec = builders::make_tone_slab(2, 2, {9000.0, 9000.0, 9000.0, 9000.0});
  CHECK_THROWS_WITH_AS(analyze(rec), doctest::Contains("degenerate"), MethodError);
}

TEST_CASE("analyze fails cleanly without band separation") {
  // Four consecutive on-bin tones: every histogram bin is occupied.
  const auto rec = builders::make_tone_slab(1, 4, {8000.0, 8250.0, 8500.0, 8750.0});
  CHECK_THROWS_WITH_AS(analyze(rec), doctest::Contains("no frequency separation"),
                       MethodError);
}

TEST_CASE("histogram reports carry the full distribution") {
  const auto a = default_analysis();
  const auto doc = json::parse(histogram_report_json(a));
  CHECK(doc.at("slab_id") == "synth-seed1");
  CHECK(doc.at("n") == 252);
  CHECK(doc.at("k") == a.histogram.k);
  CHECK(doc.at("counts").size() == static_cast<std::size_t>(a.histogram.k));
  CHECK(doc.at("densities").size() == static_cast<std::size_t>(a.histogram.k));
  CHECK(doc.at("ranges").size() == a.ranges.size());
  CHECK(doc.at("low_range").at("f_end_hz").get<double>() ==
        round_sig6(a.pair.low.f_end_hz));
  CHECK(histogram_report_json(a).back() == '\n');
}

TEST_CASE("histogram CSV has one row per bin") {
  const auto a = default_analysis();
  const auto text = histogram_csv(a.histogram);
  CHECK(text.rfind("bin_left_hz,bin_right_hz,count,density\n", 0) == 0);
  int lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines == a.histogram.k + 1);
}

TEST_CASE("roc CSV spells out the infinite sentinels") {
  const auto a = default_analysis();
  SynthConfig cfg;
  const auto [rec, spec] = generate_slab(cfg);
  const auto ev = evaluate_analysis(a, spec);
  const auto text = roc_csv(ev.roc.curve);
  CHECK(text.rfind("threshold_hz,fpr,tpr\n", 0) == 0);
  CHECK(text.find("\n-inf,0,0\n") != std::string::npos);
  CHECK(text.find("\ninf,1,1\n") != std::string::npos);
}

TEST_CASE("cluster reports expose the model parameters") {
  const auto a = default_analysis();
  const auto doc = json::parse(cluster_report_json(a));
  CHECK(doc.at("slab_id") == "synth-seed1");
  CHECK(doc.at("k") == 2);
  CHECK(doc.at("centroids_hz").size() == 2);
  CHECK(doc.at("sizes").size() == 2);
  CHECK(doc.at("defect_label") == a.model.defect_label);
  CHECK(doc.at("median_threshold_hz").get<double>() == round_sig6(a.threshold_hz));
}

TEST_CASE("metrics JSON writes undefined metrics as null") {
  ConfusionCounts c;
  c.tn = 4;  // no defects anywhere: most ratios are 0/0
  const auto doc = json::parse(metrics_json("slab-x", "detection", compute_metrics(c)));
  CHECK(doc.at("slab_id") == "slab-x");
  CHECK(doc.at("mask_type") == "detection");
  CHECK(doc.at("iou").is_null());
  CHECK(doc.at("f1").is_null());
  CHECK(doc.at("fpr") == 0.0);
  CHECK(doc.at("tnr") == 1.0);
  CHECK(doc.at("confusion").at("tn") == 4);
}

TEST_CASE("manifests record inputs, configuration and artifacts") {
  builders::TempDir tmp;
  write_text_file(tmp.file("slab.json"), "{}");

  ManifestInputs inputs;
  inputs.command = "analyze --slab slab.json";
  inputs.inputs = {{"slab", tmp.file("slab.json")}};
  inputs.seed = 7;
  const std::vector<FileArtifact> artifacts = {
      {"grid_global", "grid_global.csv", fnv1a64_hex("stub")}};

  const auto a = default_analysis();
  const auto text = manifest_json(inputs, a, artifacts);
  CHECK(text == manifest_json(inputs, a, artifacts));  // deterministic

  const auto doc = json::parse(text);
  CHECK(doc.at("tool") == "echomap");
  CHECK(doc.at("version") == kVersion);
  CHECK(doc.at("command") == inputs.command);
  CHECK(doc.at("seed") == 7);
  CHECK(doc.at("inputs").at(0).at("role") == "slab");
  CHECK(doc.at("inputs").at(0).at("fnv1a64") == fnv1a64_hex("{}"));
  CHECK(doc.at("analysis").at("cells") == 252);
  CHECK(doc.at("artifacts").at(0).at("path") == "grid_global.csv");
}

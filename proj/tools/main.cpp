// echomap CLI: synth | analyze | evaluate | pipeline | render.
//
// Exit codes: 0 success, 1 usage/config error, 2 data error (unreadable or
// malformed inputs), 3 method error (the slab violates the method's
// premises, e.g. no frequency separation).

#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "echomap/errors.hpp"
#include "echomap/io.hpp"
#include "echomap/pipeline.hpp"
#include "echomap/synth.hpp"

namespace fs = std::filesystem;
using namespace echomap;

namespace {

// Configuration errors discovered after flag parsing; mapped to exit 1
// like CLI11's own usage errors.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Collects artifacts written under one output directory so the manifest
// can list them with content hashes.
class OutputDir {
 public:
  explicit OutputDir(const std::string& dir) : dir_(dir) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw DataError("cannot create output directory: " + dir);
  }

  const fs::path& dir() const { return dir_; }
  const std::vector<FileArtifact>& artifacts() const { return artifacts_; }

  void text(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    write_text_file(path.string(), content);
    record(name, path);
  }

  void pgm(const std::string& name, const GrayRaster& img) {
    const fs::path path = dir_ / name;
    write_pgm(img, path.string());
    record(name, path);
  }

  void ppm(const std::string& name, const RgbRaster& img) {
    const fs::path path = dir_ / name;
    write_ppm(img, path.string());
    record(name, path);
  }

  void manifest(const ManifestInputs& inputs,
                const std::optional<AnalysisResult>& analysis) {
    write_text_file((dir_ / "manifest.json").string(),
                    manifest_json(inputs, analysis, artifacts_));
  }

 private:
  void record(const std::string& name, const fs::path& path) {
    artifacts_.push_back({name, name, hash_file(path.string())});
  }

  fs::path dir_;
  std::vector<FileArtifact> artifacts_;
};

std::string format_flag(double v) {
  // Full precision so the echoed command reproduces the run exactly.
  return format_exact(v);
}

struct SynthFlags {
  int rows{9};
  int cols{28};
  std::uint64_t seed{1};
  double sample_rate{500000.0};
  int samples{2000};
  std::vector<double> defect_band{8000.0, 10000.0};
  std::vector<double> intact_band{58000.0, 70000.0};
  double tau{0.0005};
  double sigma{0.0};
  bool no_snap{false};
  bool no_defects{false};
  std::string slab_id;
  std::vector<std::string> defect_rects;
  std::string out;
};

struct AnalyzeFlags {
  std::string slab;
  std::string out;
  ThresholdConfig threshold;
  RenderOptions render;
  std::uint64_t seed{0};
};

struct EvaluateFlags {
  std::string dm;
  std::string scores;
  std::string defects;
  std::string out;
  std::string mask_type{"detection"};
  RenderOptions render;
};

struct PipelineFlags {
  std::vector<std::string> slabs;
  std::vector<std::string> defects;
  std::string out;
  ThresholdConfig threshold;
  RenderOptions render;
  std::uint64_t seed{0};
};

struct RenderFlags {
  std::string grid;
  std::string histogram;
  std::string dm;
  std::string gtm;
  std::string out;
  RenderOptions render;
};

CellRect parse_cell_rect(const std::string& text) {
  CellRect r;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d,%d,%d,%d%c", &r.row, &r.col, &r.rows, &r.cols,
                  &tail) != 4) {
    throw ConfigError("--defect expects row,col,rows,cols (got '" + text + "')");
  }
  return r;
}

SynthConfig to_synth_config(const SynthFlags& f) {
  SynthConfig cfg;
  cfg.shape = GridShape{f.rows, f.cols};
  cfg.sample_rate_hz = f.sample_rate;
  cfg.n_samples = f.samples;
  cfg.defect_band_hz[0] = f.defect_band[0];
  cfg.defect_band_hz[1] = f.defect_band[1];
  cfg.intact_band_hz[0] = f.intact_band[0];
  cfg.intact_band_hz[1] = f.intact_band[1];
  cfg.decay_tau_s = f.tau;
  cfg.noise_sigma = f.sigma;
  cfg.seed = f.seed;
  cfg.snap_tones = !f.no_snap;
  cfg.slab_id = f.slab_id;
  if (f.no_defects) {
    cfg.defects.emplace();
  } else if (!f.defect_rects.empty()) {
    cfg.defects.emplace();
    for (const auto& text : f.defect_rects) cfg.defects->push_back(parse_cell_rect(text));
  }
  return cfg;
}

std::string synth_command_echo(const SynthFlags& f) {
  std::ostringstream os;
  os << "synth --rows " << f.rows << " --cols " << f.cols << " --seed " << f.seed
     << " --sample-rate " << format_flag(f.sample_rate) << " --samples " << f.samples
     << " --defect-band " << format_flag(f.defect_band[0]) << " "
     << format_flag(f.defect_band[1]) << " --intact-band "
     << format_flag(f.intact_band[0]) << " " << format_flag(f.intact_band[1])
     << " --tau " << format_flag(f.tau) << " --sigma " << format_flag(f.sigma);
  if (f.no_snap) os << " --no-snap";
  if (f.no_defects) os << " --no-defects";
  if (!f.slab_id.empty()) os << " --slab-id " << f.slab_id;
  for (const auto& r : f.defect_rects) os << " --defect " << r;
  return os.str();
}

std::string analyze_command_echo(const std::string& name, const ThresholdConfig& t,
                                 const RenderOptions& r, std::uint64_t seed) {
  std::ostringstream os;
  os << name << " --exponent " << format_flag(t.exponent) << " --multiplier "
     << format_flag(t.multiplier) << " --seed " << seed << " --upscale " << r.upscale
     << " --alpha " << format_flag(r.overlay_alpha);
  if (r.smooth) os << " --smooth";
  return os.str();
}

int run_synth(const SynthFlags& flags) {
  SynthConfig cfg = to_synth_config(flags);
  std::pair<SlabRecording, DefectSpec> generated;
  try {
    generated = generate_slab(cfg);
  } catch (const DataError& e) {
    // Everything generate_slab rejects is configuration, not data.
    throw ConfigError(e.what());
  }

  OutputDir out(flags.out);
  write_slab(generated.first, (out.dir() / "slab.json").string());
  write_defect_spec(generated.second, (out.dir() / "defects.json").string());

  // write_slab/write_defect_spec bypass OutputDir's recorder, so hash the
  // files directly for the manifest.
  std::vector<FileArtifact> artifacts{
      {"slab", "slab.json", hash_file((out.dir() / "slab.json").string())},
      {"defects", "defects.json", hash_file((out.dir() / "defects.json").string())},
  };
  ManifestInputs inputs;
  inputs.command = synth_command_echo(flags);
  inputs.seed = flags.seed;
  write_text_file((out.dir() / "manifest.json").string(),
                  manifest_json(inputs, std::nullopt, artifacts));
  std::printf("wrote %s\n", (out.dir() / "slab.json").string().c_str());
  std::printf("wrote %s\n", (out.dir() / "defects.json").string().c_str());
  return 0;
}

AnalysisResult analyze_to_dir(const SlabRecording& rec, const ThresholdConfig& threshold,
                              const RenderOptions& render, std::uint64_t seed,
                              OutputDir& out) {
  AnalysisResult a = analyze(rec, threshold, seed);
  out.text("grid_global.csv", grid_csv(a.global_grid));
  out.text("grid_low.csv", grid_csv(a.low_grid));
  out.text("surface.csv", surface_csv(a.low_grid));
  out.text("histogram.json", histogram_report_json(a));
  out.text("histogram.csv", histogram_csv(a.histogram));
  out.text("cluster.json", cluster_report_json(a));
  out.pgm("binary_mask.pgm", mask_raster(a.binary, render.upscale));
  out.pgm("cluster_map.pgm", mask_raster(a.cluster, render.upscale));
  out.ppm("heatmap.ppm",
          heatmap(a.low_grid, warm_cool_colormap(), render.upscale, render.smooth));
  return a;
}

void evaluate_to_dir(const AnalysisResult& a, const DefectSpec& spec,
                     const RenderOptions& render, OutputDir& out) {
  const EvaluationResult e = evaluate_analysis(a, spec);
  out.text("metrics_binary.json", metrics_json(a.slab_id, "binary", e.binary));
  out.text("metrics_cluster.json", metrics_json(a.slab_id, "cluster", e.cluster));
  out.text("roc.csv", roc_csv(e.roc.curve));
  out.pgm("gtm.pgm", mask_to_raster(e.gtm.mask));

  const GrayRaster gtm_raster = mask_raster(e.gtm.mask, render.upscale);
  for (const auto& [mask, name] :
       {std::pair{&a.binary, "overlay_binary.ppm"}, {&a.cluster, "overlay_cluster.ppm"}}) {
    const auto [dm_up, unused] = align_masks(*mask, e.gtm);
    const RgbRaster dm_raster = to_rgb(mask_raster(dm_up, render.upscale));
    out.ppm(name, overlay(gtm_raster, dm_raster, render.overlay_alpha));
  }
}

int run_analyze(const AnalyzeFlags& flags) {
  const SlabRecording rec = load_slab(flags.slab);
  OutputDir out(flags.out);
  AnalysisResult a;
  try {
    a = analyze_to_dir(rec, flags.threshold, flags.render, flags.seed, out);
  } catch (const MethodError& e) {
    throw MethodError(std::string(e.what()) + " (slab '" + rec.slab_id + "')");
  }

  ManifestInputs inputs;
  inputs.command = analyze_command_echo("analyze", flags.threshold, flags.render, flags.seed);
  inputs.inputs = {{"slab", flags.slab}};
  inputs.threshold = flags.threshold;
  inputs.render = flags.render;
  inputs.seed = flags.seed;
  out.manifest(inputs, a);
  std::printf("analyzed slab '%s': low [%s, %s] Hz, high [%s, %s] Hz\n",
              a.slab_id.c_str(), format_sig6(a.pair.low.f_start_hz).c_str(),
              format_sig6(a.pair.low.f_end_hz).c_str(),
              format_sig6(a.pair.high.f_start_hz).c_str(),
              format_sig6(a.pair.high.f_end_hz).c_str());
  return 0;
}

int run_evaluate(const EvaluateFlags& flags) {
  const DefectSpec spec = parse_defect_spec(flags.defects);
  BinaryMask dm = raster_to_mask(read_pgm(flags.dm));
  const FrequencyGrid scores = parse_grid_csv(read_text_file(flags.scores));
  if (!(scores.shape == dm.shape)) {
    // analyze emits its mask PGMs at the upscaled view resolution; accept
    // those directly by undoing the block replication (lossless, since every
    // block is constant; majority vote also tolerates hand-edited rasters).
    if (dm.shape.rows % scores.shape.rows != 0 ||
        dm.shape.cols % scores.shape.cols != 0) {
      throw DataError(
          "evaluate: detection mask is neither at score-grid resolution nor "
          "an integer upscale of it");
    }
    dm = downsample_majority(dm, scores.shape);
  }

  const GroundTruthMask gtm = rasterize_gtm(spec);
  const MetricsReport report = evaluate_slab(dm, scores, gtm);
  const RocResult roc = roc_auc(scores, downsample_majority(gtm.mask, scores.shape));

  OutputDir out(flags.out);
  out.text("metrics.json", metrics_json(spec.slab_id, flags.mask_type, report));
  out.text("roc.csv", roc_csv(roc.curve));
  out.pgm("gtm.pgm", mask_to_raster(gtm.mask));
  const auto [dm_up, unused] = align_masks(dm, gtm);
  out.ppm("overlay.ppm",
          overlay(mask_raster(gtm.mask, flags.render.upscale),
                  to_rgb(mask_raster(dm_up, flags.render.upscale)),
                  flags.render.overlay_alpha));

  ManifestInputs inputs;
  std::ostringstream cmd;
  cmd << "evaluate --mask-type " << flags.mask_type << " --upscale "
      << flags.render.upscale << " --alpha " << format_flag(flags.render.overlay_alpha);
  inputs.command = cmd.str();
  inputs.inputs = {{"dm", flags.dm}, {"scores", flags.scores}, {"defects", flags.defects}};
  inputs.render = flags.render;
  out.manifest(inputs, std::nullopt);
  std::printf("evaluated '%s' against spec '%s'\n", flags.dm.c_str(),
              spec.slab_id.c_str());
  return 0;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return 1;
  if (dynamic_cast<const MethodError*>(&e)) return 3;
  return 2;  // DataError and anything else unexpected from I/O
}

int run_pipeline(const PipelineFlags& flags) {
  if (flags.slabs.empty()) throw ConfigError("pipeline: at least one --slab is required");
  if (flags.slabs.size() != flags.defects.size()) {
    throw ConfigError("pipeline: --slab and --defects counts must match");
  }

  OutputDir out(flags.out);
  nlohmann::ordered_json summary = nlohmann::ordered_json::array();
  int first_failure = 0;

  for (std::size_t i = 0; i < flags.slabs.size(); ++i) {
    const std::string stem = fs::path(flags.slabs[i]).stem().string();
    nlohmann::ordered_json entry;
    entry["slab"] = flags.slabs[i];
    entry["defects"] = flags.defects[i];
    entry["directory"] = stem;
    try {
      const SlabRecording rec = load_slab(flags.slabs[i]);
      const DefectSpec spec = parse_defect_spec(flags.defects[i]);
      OutputDir slab_out((out.dir() / stem).string());
      const AnalysisResult a =
          analyze_to_dir(rec, flags.threshold, flags.render, flags.seed, slab_out);
      evaluate_to_dir(a, spec, flags.render, slab_out);

      ManifestInputs inputs;
      inputs.command =
          analyze_command_echo("pipeline", flags.threshold, flags.render, flags.seed);
      inputs.inputs = {{"slab", flags.slabs[i]}, {"defects", flags.defects[i]}};
      inputs.threshold = flags.threshold;
      inputs.render = flags.render;
      inputs.seed = flags.seed;
      slab_out.manifest(inputs, a);

      entry["status"] = "ok";
      entry["slab_id"] = rec.slab_id;
      std::printf("slab '%s': ok\n", flags.slabs[i].c_str());
    } catch (const std::exception& e) {
      // One slab's failure never aborts the batch; record and continue.
      entry["status"] = "error";
      entry["error"] = e.what();
      if (first_failure == 0) first_failure = exit_code_for(e);
      std::fprintf(stderr, "slab '%s': %s\n", flags.slabs[i].c_str(), e.what());
    }
    summary.push_back(std::move(entry));
  }

  nlohmann::ordered_json doc;
  doc["tool"] = "echomap";
  doc["version"] = kVersion;
  doc["slabs"] = std::move(summary);
  write_text_file((out.dir() / "summary.json").string(), doc.dump(2) + "\n");
  return first_failure;
}

FrequencyHistogram histogram_from_report(const std::string& path) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(read_text_file(path));
    FrequencyHistogram h;
    h.f_min_hz = doc.at("f_min_hz").get<double>();
    h.f_max_hz = doc.at("f_max_hz").get<double>();
    h.k = doc.at("k").get<int>();
    h.delta_f_hz = doc.at("delta_f_hz").get<double>();
    h.n_total = doc.at("n").get<long long>();
    h.counts = doc.at("counts").get<std::vector<long long>>();
    h.densities = doc.at("densities").get<std::vector<double>>();
    if (h.counts.size() != static_cast<std::size_t>(h.k) ||
        h.densities.size() != static_cast<std::size_t>(h.k)) {
      throw DataError("histogram report " + path + ": bin count mismatch");
    }
    return h;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw DataError("histogram report " + path + ": " + e.what());
  }
}

int run_render(const RenderFlags& flags) {
  if (flags.grid.empty() && flags.histogram.empty() && flags.dm.empty()) {
    throw ConfigError("render: nothing to do (pass --grid, --histogram or --dm)");
  }
  if (flags.dm.empty() != flags.gtm.empty()) {
    throw ConfigError("render: --dm and --gtm must be given together");
  }

  OutputDir out(flags.out);
  ManifestInputs inputs;

  if (!flags.grid.empty()) {
    const FrequencyGrid grid = parse_grid_csv(read_text_file(flags.grid));
    out.ppm("heatmap.ppm", heatmap(grid, warm_cool_colormap(), flags.render.upscale,
                                   flags.render.smooth));
    out.text("surface.csv", surface_csv(grid));
    inputs.inputs.emplace_back("grid", flags.grid);
  }
  if (!flags.histogram.empty()) {
    out.text("histogram.csv", histogram_csv(histogram_from_report(flags.histogram)));
    inputs.inputs.emplace_back("histogram", flags.histogram);
  }
  if (!flags.dm.empty()) {
    const BinaryMask dm = raster_to_mask(read_pgm(flags.dm));
    const GroundTruthMask gtm{raster_to_mask(read_pgm(flags.gtm)), flags.gtm};
    const auto [dm_up, unused] = align_masks(dm, gtm);
    out.pgm("dm.pgm", mask_raster(dm_up, flags.render.upscale));
    out.pgm("gtm.pgm", mask_raster(gtm.mask, flags.render.upscale));
    out.ppm("overlay.ppm",
            overlay(mask_raster(gtm.mask, flags.render.upscale),
                    to_rgb(mask_raster(dm_up, flags.render.upscale)),
                    flags.render.overlay_alpha));
    inputs.inputs.emplace_back("dm", flags.dm);
    inputs.inputs.emplace_back("gtm", flags.gtm);
  }

  std::ostringstream cmd;
  cmd << "render --upscale " << flags.render.upscale << " --alpha "
      << format_flag(flags.render.overlay_alpha);
  if (flags.render.smooth) cmd << " --smooth";
  inputs.command = cmd.str();
  inputs.render = flags.render;
  out.manifest(inputs, std::nullopt);
  return 0;
}

void add_render_flags(CLI::App* cmd, RenderOptions& render) {
  cmd->add_option("--upscale", render.upscale, "Raster upscale factor per cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--alpha", render.overlay_alpha, "Overlay blend weight for the DM")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_flag("--smooth", render.smooth, "Bilinear-smooth heatmaps");
}

void add_threshold_flags(CLI::App* cmd, ThresholdConfig& threshold) {
  cmd->add_option("--exponent", threshold.exponent, "Exponential-rule exponent")
      ->check(CLI::Range(1.0 + 1e-9, 100.0))
      ->capture_default_str();
  cmd->add_option("--multiplier", threshold.multiplier, "Square-root-rule multiplier")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"echomap: impact-echo defect detection on gridded slab recordings"};
  app.require_subcommand(1);

  SynthFlags synth_flags;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic slab recording");
  synth_cmd->add_option("--rows", synth_flags.rows, "Grid rows")
      ->check(CLI::PositiveNumber)->capture_default_str();
  synth_cmd->add_option("--cols", synth_flags.cols, "Grid columns")
      ->check(CLI::PositiveNumber)->capture_default_str();
  synth_cmd->add_option("--seed", synth_flags.seed, "RNG seed")->capture_default_str();
  synth_cmd->add_option("--sample-rate", synth_flags.sample_rate, "Sample rate in Hz")
      ->check(CLI::PositiveNumber)->capture_default_str();
  synth_cmd->add_option("--samples", synth_flags.samples, "Samples per waveform")
      ->check(CLI::Range(2, 1 << 24))->capture_default_str();
  synth_cmd->add_option("--defect-band", synth_flags.defect_band,
                        "Defect tone band in Hz (lo hi)")
      ->expected(2);
  synth_cmd->add_option("--intact-band", synth_flags.intact_band,
                        "Intact tone band in Hz (lo hi)")
      ->expected(2);
  synth_cmd->add_option("--tau", synth_flags.tau, "Decay time constant in seconds")
      ->check(CLI::PositiveNumber)->capture_default_str();
  synth_cmd->add_option("--sigma", synth_flags.sigma, "Gaussian noise sigma")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  synth_cmd->add_flag("--no-snap", synth_flags.no_snap,
                      "Do not snap tones to spectrum bins");
  synth_cmd->add_option("--slab-id", synth_flags.slab_id, "Slab identifier");
  auto* defect_opt =
      synth_cmd->add_option("--defect", synth_flags.defect_rects,
                            "Defect rectangle row,col,rows,cols (repeatable)");
  synth_cmd->add_flag("--no-defects", synth_flags.no_defects,
                      "Plant no defects instead of the default layout")
      ->excludes(defect_opt);
  synth_cmd->add_option("--out", synth_flags.out, "Output directory")->required();

  AnalyzeFlags analyze_flags;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run detection on a slab file");
  analyze_cmd->add_option("--slab", analyze_flags.slab, "Slab recording JSON")
      ->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--out", analyze_flags.out, "Output directory")->required();
  analyze_cmd->add_option("--seed", analyze_flags.seed, "Clustering seed")
      ->capture_default_str();
  add_threshold_flags(analyze_cmd, analyze_flags.threshold);
  add_render_flags(analyze_cmd, analyze_flags.render);

  EvaluateFlags evaluate_flags;
  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "Score a detection mask against a defect spec");
  evaluate_cmd->add_option("--dm", evaluate_flags.dm, "Detection mask PGM")
      ->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--scores", evaluate_flags.scores,
                           "Low-band frequency grid CSV (AUC scores)")
      ->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--defects", evaluate_flags.defects, "Defect spec JSON")
      ->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--out", evaluate_flags.out, "Output directory")->required();
  evaluate_cmd->add_option("--mask-type", evaluate_flags.mask_type,
                           "Mask type tag for the report")
      ->capture_default_str();
  add_render_flags(evaluate_cmd, evaluate_flags.render);

  PipelineFlags pipeline_flags;
  auto* pipeline_cmd =
      app.add_subcommand("pipeline", "Analyze and evaluate one or more slabs");
  pipeline_cmd->add_option("--slab", pipeline_flags.slabs,
                           "Slab recording JSON (repeatable)")
      ->required();
  pipeline_cmd->add_option("--defects", pipeline_flags.defects,
                           "Defect spec JSON, one per --slab")
      ->required();
  pipeline_cmd->add_option("--out", pipeline_flags.out, "Output directory")->required();
  pipeline_cmd->add_option("--seed", pipeline_flags.seed, "Clustering seed")
      ->capture_default_str();
  add_threshold_flags(pipeline_cmd, pipeline_flags.threshold);
  add_render_flags(pipeline_cmd, pipeline_flags.render);

  RenderFlags render_flags;
  auto* render_cmd =
      app.add_subcommand("render", "Re-render rasters from analysis data files");
  render_cmd->add_option("--grid", render_flags.grid, "Frequency grid CSV")
      ->check(CLI::ExistingFile);
  render_cmd->add_option("--histogram", render_flags.histogram, "Histogram report JSON")
      ->check(CLI::ExistingFile);
  render_cmd->add_option("--dm", render_flags.dm, "Detection mask PGM")
      ->check(CLI::ExistingFile);
  render_cmd->add_option("--gtm", render_flags.gtm, "Ground truth mask PGM")
      ->check(CLI::ExistingFile);
  render_cmd->add_option("--out", render_flags.out, "Output directory")->required();
  add_render_flags(render_cmd, render_flags.render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(synth_cmd)) return run_synth(synth_flags);
    if (app.got_subcommand(analyze_cmd)) return run_analyze(analyze_flags);
    if (app.got_subcommand(evaluate_cmd)) return run_evaluate(evaluate_flags);
    if (app.got_subcommand(pipeline_cmd)) return run_pipeline(pipeline_flags);
    if (app.got_subcommand(render_cmd)) return run_render(render_flags);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const MethodError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}

#include "echomap/synth.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "echomap/errors.hpp"

namespace echomap {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Seeded stream with explicit transforms; the standard distributions are
// implementation-defined, so byte-identical output across toolchains needs
// the mapping from raw engine output spelled out here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1): top 53 bits of the engine output.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; the spare value is cached so one engine draw pair yields
  // two gaussians.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]: keeps log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

 private:
  std::mt19937_64 engine_;
  double spare_{0.0};
  bool have_spare_{false};
};

void check_config(const SynthConfig& cfg) {
  std::ostringstream why;
  const double nyquist = cfg.sample_rate_hz / 2.0;
  if (cfg.shape.rows < 1 || cfg.shape.cols < 1) {
    why << "grid shape must be at least 1x1";
  } else if (!(cfg.sample_rate_hz > 0.0)) {
    why << "sample_rate must be positive";
  } else if (cfg.n_samples < 2) {
    why << "n_samples must be at least 2";
  } else if (!(cfg.defect_band_hz[0] > 0.0 && cfg.defect_band_hz[0] <= cfg.defect_band_hz[1])) {
    why << "defect band must be positive and ordered";
  } else if (!(cfg.intact_band_hz[0] > 0.0 && cfg.intact_band_hz[0] <= cfg.intact_band_hz[1])) {
    why << "intact band must be positive and ordered";
  } else if (!(cfg.defect_band_hz[1] < cfg.intact_band_hz[0])) {
    why << "defect band must lie strictly below the intact band";
  } else if (!(cfg.intact_band_hz[1] < nyquist)) {
    why << "bands must lie below Nyquist (" << nyquist << " Hz)";
  } else if (!(cfg.decay_tau_s > 0.0)) {
    why << "decay_tau must be positive";
  } else if (cfg.noise_sigma < 0.0) {
    why << "noise_sigma must be non-negative";
  } else if (cfg.defects) {
    for (const auto& r : *cfg.defects) {
      if (r.rows < 1 || r.cols < 1 || r.row < 0 || r.col < 0 ||
          r.row + r.rows > cfg.shape.rows || r.col + r.cols > cfg.shape.cols) {
        why << "defect rectangle outside the grid";
        break;
      }
    }
  }
  const std::string msg = why.str();
  if (!msg.empty()) throw DataError("synth config: " + msg);
}

}  // namespace

double snap_to_bin(double f_hz, double sample_rate_hz, int n_samples) {
  const double nyquist = sample_rate_hz / 2.0;
  if (!(f_hz > 0.0 && f_hz < nyquist)) {
    throw DataError("snap_to_bin: frequency outside (0, Nyquist)");
  }
  const double bin = f_hz * n_samples / sample_rate_hz;
  double k = std::floor(bin);
  if (bin - k > 0.5) k += 1.0;  // exact half ties stay on the lower bin
  return k * sample_rate_hz / n_samples;
}

std::vector<CellRect> default_defect_layout(const GridShape& shape) {
  // Three non-overlapping rectangles anchored proportionally, covering a
  // bit under half the grid (112 of 252 cells at 9x28). Keeping the defect
  // fraction near one half keeps the median threshold inside the gap
  // between the two tone populations instead of inside one of them.
  struct Frac {
    double x, y, w, h;
  };
  static constexpr Frac kLayout[] = {
      {0.04, 0.12, 0.32, 0.44},
      {0.43, 0.00, 0.29, 0.33},
      {0.29, 0.56, 0.46, 0.44},
  };
  std::vector<CellRect> rects;
  for (const auto& f : kLayout) {
    CellRect r;
    r.col = static_cast<int>(std::lround(f.x * shape.cols));
    r.row = static_cast<int>(std::lround(f.y * shape.rows));
    r.cols = std::max(1, static_cast<int>(std::lround(f.w * shape.cols)));
    r.rows = std::max(1, static_cast<int>(std::lround(f.h * shape.rows)));
    r.col = std::min(r.col, shape.cols - 1);
    r.row = std::min(r.row, shape.rows - 1);
    r.cols = std::min(r.cols, shape.cols - r.col);
    r.rows = std::min(r.rows, shape.rows - r.row);
    rects.push_back(r);
  }
  return rects;
}

std::pair<SlabRecording, DefectSpec> generate_slab(const SynthConfig& cfg) {
  check_config(cfg);
  const std::vector<CellRect> defects =
      cfg.defects ? *cfg.defects : default_defect_layout(cfg.shape);

  std::string slab_id = cfg.slab_id;
  if (slab_id.empty()) {
    slab_id = "synth-seed" + std::to_string(cfg.seed);
  }

  std::vector<std::uint8_t> is_defect(static_cast<std::size_t>(cfg.shape.cell_count()), 0);
  for (const auto& r : defects) {
    for (int i = r.row; i < r.row + r.rows; ++i) {
      for (int j = r.col; j < r.col + r.cols; ++j) {
        is_defect[static_cast<std::size_t>(cfg.shape.index_of(i, j))] = 1;
      }
    }
  }

  Rng rng(cfg.seed);
  SlabRecording rec;
  rec.slab_id = slab_id;
  rec.shape = cfg.shape;
  rec.cell_size_m = std::array<double, 2>{1.0, 1.0};
  rec.readings.resize(is_defect.size());

  const double dt = 1.0 / cfg.sample_rate_hz;
  for (std::size_t cell = 0; cell < is_defect.size(); ++cell) {
    const double* band = is_defect[cell] ? cfg.defect_band_hz : cfg.intact_band_hz;
    double f = rng.uniform(band[0], band[1]);
    if (cfg.snap_tones) f = snap_to_bin(f, cfg.sample_rate_hz, cfg.n_samples);

    TimeSeries& ts = rec.readings[cell];
    ts.sample_rate_hz = cfg.sample_rate_hz;
    ts.amplitudes.resize(static_cast<std::size_t>(cfg.n_samples));
    for (int i = 0; i < cfg.n_samples; ++i) {
      const double t = i * dt;
      double a = std::exp(-t / cfg.decay_tau_s) * std::sin(2.0 * kPi * f * t);
      if (cfg.noise_sigma > 0.0) a += cfg.noise_sigma * rng.gaussian();
      ts.amplitudes[static_cast<std::size_t>(i)] = a;
    }
  }

  DefectSpec spec;
  spec.slab_id = slab_id;
  spec.slab_w_m = static_cast<double>(cfg.shape.cols);
  spec.slab_h_m = static_cast<double>(cfg.shape.rows);
  spec.px_w = cfg.shape.cols;
  spec.px_h = cfg.shape.rows;
  for (std::size_t i = 0; i < defects.size(); ++i) {
    const auto& r = defects[i];
    DefectRect d;
    d.x_m = static_cast<double>(r.col);
    d.y_m = static_cast<double>(r.row);
    d.w_m = static_cast<double>(r.cols);
    d.h_m = static_cast<double>(r.rows);
    d.label = "defect-" + std::to_string(i + 1);
    spec.defects.push_back(std::move(d));
  }
  return {std::move(rec), std::move(spec)};
}

}  // namespace echomap

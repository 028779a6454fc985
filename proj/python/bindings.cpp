#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "echomap/adaptive.hpp"
#include "echomap/detect.hpp"
#include "echomap/dsp.hpp"
#include "echomap/errors.hpp"
#include "echomap/evaluate.hpp"
#include "echomap/groundtruth.hpp"
#include "echomap/io.hpp"
#include "echomap/mapping.hpp"
#include "echomap/pipeline.hpp"
#include "echomap/slab.hpp"
#include "echomap/synth.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace echomap {
namespace {

// double[2] members cannot be bound directly; present them as 2-tuples.
template <typename Owner>
py::cpp_function band_getter(double (Owner::*member)[2]) {
  return py::cpp_function([member](const Owner& o) {
    return std::array<double, 2>{(o.*member)[0], (o.*member)[1]};
  });
}

template <typename Owner>
py::cpp_function band_setter(double (Owner::*member)[2]) {
  return py::cpp_function([member](Owner& o, const std::array<double, 2>& band) {
    (o.*member)[0] = band[0];
    (o.*member)[1] = band[1];
  });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Impact-echo defect mapping: slab synthesis, spectral analysis, "
            "defect masks and evaluation metrics.";
  m.attr("__version__") = kVersion;

  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<MethodError>(m, "MethodError", PyExc_RuntimeError);

  // -- grid & recordings ----------------------------------------------------

  py::class_<GridShape>(m, "GridShape")
      .def(py::init<int, int>(), "rows"_a = 0, "cols"_a = 0)
      .def_readwrite("rows", &GridShape::rows)
      .def_readwrite("cols", &GridShape::cols)
      .def("cell_count", &GridShape::cell_count)
      .def("index_of", &GridShape::index_of, "row"_a, "col"_a)
      .def("cell_of", &GridShape::cell_of, "index"_a)
      .def("__eq__", [](const GridShape& a, const GridShape& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const GridShape& s) {
        std::ostringstream oss;
        oss << "GridShape(rows=" << s.rows << ", cols=" << s.cols << ")";
        return oss.str();
      });

  py::class_<TimeSeries>(m, "TimeSeries")
      .def(py::init([](double fs, std::vector<double> amplitudes) {
             return TimeSeries{fs, std::move(amplitudes)};
           }),
           "sample_rate_hz"_a = 0.0, "amplitudes"_a = std::vector<double>{})
      .def_readwrite("sample_rate_hz", &TimeSeries::sample_rate_hz)
      .def_readwrite("amplitudes", &TimeSeries::amplitudes)
      .def("__len__", &TimeSeries::size);

  py::class_<SlabRecording>(m, "SlabRecording")
      .def(py::init<>())
      .def_readwrite("slab_id", &SlabRecording::slab_id)
      .def_readwrite("shape", &SlabRecording::shape)
      .def_readwrite("readings", &SlabRecording::readings)
      .def_readwrite("cell_size_m", &SlabRecording::cell_size_m)
      .def("at", &SlabRecording::at, "row"_a, "col"_a);

  m.def("load_slab", &load_slab, "path"_a,
        "Parse and validate a slab JSON file.");
  m.def("write_slab", &write_slab, "rec"_a, "path"_a,
        "Write the slab JSON format; amplitudes round-trip bit-exactly.");
  m.def("validate", &validate, "rec"_a,
        "Every violated recording invariant, empty when valid.");

  // -- spectra --------------------------------------------------------------

  py::class_<FrequencyRange>(m, "FrequencyRange")
      .def(py::init<>())
      .def(py::init([](double f_start, double f_end) {
             return FrequencyRange{f_start, f_end, -1, -1};
           }),
           "f_start_hz"_a, "f_end_hz"_a)
      .def_readwrite("f_start_hz", &FrequencyRange::f_start_hz)
      .def_readwrite("f_end_hz", &FrequencyRange::f_end_hz)
      .def_readwrite("b_start", &FrequencyRange::b_start)
      .def_readwrite("b_end", &FrequencyRange::b_end)
      .def("contains", &FrequencyRange::contains, "f_hz"_a)
      .def("__repr__", [](const FrequencyRange& r) {
        std::ostringstream oss;
        oss << "FrequencyRange(" << r.f_start_hz << ", " << r.f_end_hz << ")";
        return oss.str();
      });

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("freqs_hz", &Spectrum::freqs_hz)
      .def_readonly("mags", &Spectrum::mags)
      .def("__len__", &Spectrum::size);

  m.def("normalize", &normalize, "ts"_a,
        "Min-max normalization to [0, 1]; constant signals map to zeros.");
  m.def("compute_spectrum", &compute_spectrum, "ts"_a, "detrend"_a = true,
        "Positive-frequency magnitude spectrum at the native length.");
  m.def("dominant_frequency", &dominant_frequency, "spectrum"_a,
        "range"_a = py::none(), "exclude_dc"_a = true,
        "Bin-center frequency of maximal magnitude; ties go lower.");

  // -- adaptive thresholding ------------------------------------------------

  py::class_<ThresholdConfig>(m, "ThresholdConfig")
      .def(py::init([](double exponent, double multiplier) {
             return ThresholdConfig{exponent, multiplier};
           }),
           "exponent"_a = 1.5, "multiplier"_a = 1.5)
      .def_readwrite("exponent", &ThresholdConfig::exponent)
      .def_readwrite("multiplier", &ThresholdConfig::multiplier);

  py::class_<FrequencyHistogram>(m, "FrequencyHistogram")
      .def_readonly("f_min_hz", &FrequencyHistogram::f_min_hz)
      .def_readonly("f_max_hz", &FrequencyHistogram::f_max_hz)
      .def_readonly("k", &FrequencyHistogram::k)
      .def_readonly("delta_f_hz", &FrequencyHistogram::delta_f_hz)
      .def_readonly("n_total", &FrequencyHistogram::n_total)
      .def_readonly("counts", &FrequencyHistogram::counts)
      .def_readonly("densities", &FrequencyHistogram::densities)
      .def("bin_left", &FrequencyHistogram::bin_left, "b"_a)
      .def("bin_right", &FrequencyHistogram::bin_right, "b"_a);

  py::class_<RangePair>(m, "RangePair")
      .def(py::init<>())
      .def_readwrite("low", &RangePair::low)
      .def_readwrite("high", &RangePair::high);

  m.def("bin_count", &bin_count, "n"_a, "cfg"_a = ThresholdConfig{},
        "Combined bin count: ceil of the mean of the exponential and "
        "adjusted square-root rules.");
  m.def("build_histogram", &build_histogram, "freqs_hz"_a, "k"_a,
        "Equal-width histogram over [min, max]; the final bin is closed.");
  m.def("identify_ranges", &identify_ranges, "histogram"_a,
        "Maximal runs of consecutive nonzero bins, ascending.");
  m.def("classify_ranges", &classify_ranges, "ranges"_a,
        "First range is the low (defect) band, last the high (intact) band.");

  // -- frequency grids ------------------------------------------------------

  py::class_<FrequencyGrid>(m, "FrequencyGrid")
      .def(py::init([](GridShape shape, std::vector<double> values_hz) {
             return FrequencyGrid{shape, std::move(values_hz)};
           }),
           "shape"_a = GridShape{}, "values_hz"_a = std::vector<double>{})
      .def_readwrite("shape", &FrequencyGrid::shape)
      .def_readwrite("values_hz", &FrequencyGrid::values_hz)
      .def("at", &FrequencyGrid::at, "row"_a, "col"_a);

  m.def("global_frequency_grid", &global_frequency_grid, "rec"_a,
        "Pass 1: per-cell dominant frequency over the full positive spectrum.");
  m.def("low_band_frequency_grid", &low_band_frequency_grid, "rec"_a, "pair"_a,
        "Pass 2: dominant frequency restricted to the identified low range.");
  m.def("cell_spectra", &cell_spectra, "rec"_a,
        "One detrended spectrum per cell of the normalized readings.");

  // -- defect masks ---------------------------------------------------------

  py::class_<BinaryMask>(m, "BinaryMask")
      .def(py::init([](GridShape shape, std::vector<std::uint8_t> values) {
             return BinaryMask{shape, std::move(values)};
           }),
           "shape"_a = GridShape{}, "values"_a = std::vector<std::uint8_t>{})
      .def_readwrite("shape", &BinaryMask::shape)
      .def_readwrite("values", &BinaryMask::values)
      .def("at", &BinaryMask::at, "row"_a, "col"_a);

  py::class_<ClusterModel>(m, "ClusterModel")
      .def_readonly("k", &ClusterModel::k)
      .def_readonly("centroids_hz", &ClusterModel::centroids_hz)
      .def_readonly("labels", &ClusterModel::labels)
      .def_readonly("sizes", &ClusterModel::sizes)
      .def_readonly("defect_label", &ClusterModel::defect_label)
      .def_readonly("cost", &ClusterModel::cost);

  m.def("binary_mask", &binary_mask, "grid"_a,
        "Median-threshold mask and its threshold: defect (0) where f < median.");
  m.def("kmeans_1d", &kmeans_1d, "values"_a, "k"_a, "seed"_a = 0,
        "1-D k-means; K = 2 is the exact contiguous-split minimizer.");
  m.def("cluster_map", &cluster_map, "grid"_a, "seed"_a = 0,
        "K = 2 clustering of the grid; the lowest-centroid cluster is defect.");

  // -- ground truth ---------------------------------------------------------

  py::class_<DefectRect>(m, "DefectRect")
      .def(py::init([](double x, double y, double w, double h, std::string label) {
             return DefectRect{x, y, w, h, std::move(label)};
           }),
           "x_m"_a = 0.0, "y_m"_a = 0.0, "w_m"_a = 0.0, "h_m"_a = 0.0,
           "label"_a = std::string{})
      .def_readwrite("x_m", &DefectRect::x_m)
      .def_readwrite("y_m", &DefectRect::y_m)
      .def_readwrite("w_m", &DefectRect::w_m)
      .def_readwrite("h_m", &DefectRect::h_m)
      .def_readwrite("label", &DefectRect::label);

  py::class_<DefectSpec>(m, "DefectSpec")
      .def(py::init<>())
      .def_readwrite("slab_id", &DefectSpec::slab_id)
      .def_readwrite("slab_w_m", &DefectSpec::slab_w_m)
      .def_readwrite("slab_h_m", &DefectSpec::slab_h_m)
      .def_readwrite("px_w", &DefectSpec::px_w)
      .def_readwrite("px_h", &DefectSpec::px_h)
      .def_readwrite("defects", &DefectSpec::defects);

  py::class_<GroundTruthMask>(m, "GroundTruthMask")
      .def_readonly("mask", &GroundTruthMask::mask)
      .def_readonly("spec_id", &GroundTruthMask::spec_id);

  m.def("parse_defect_spec", &parse_defect_spec, "path"_a,
        "Parse and validate a defect spec JSON file.");
  m.def("parse_defect_spec_json", &parse_defect_spec_json, "text"_a);
  m.def("write_defect_spec", &write_defect_spec, "spec"_a, "path"_a);
  m.def("rasterize_gtm", &rasterize_gtm, "spec"_a,
        "Pixel-center rasterization, closed on low edges, open on high.");
  m.def("align_masks", &align_masks, "dm"_a, "gtm"_a,
        "Upsample the detection mask to the GTM raster by block replication.");
  m.def("downsample_majority", &downsample_majority, "gtm"_a, "shape"_a,
        "Majority vote of GTM pixels per grid cell; ties count as defect.");

  // -- evaluation -----------------------------------------------------------

  py::class_<ConfusionCounts>(m, "ConfusionCounts")
      .def(py::init([](long long tp, long long fp, long long fn, long long tn) {
             return ConfusionCounts{tp, fp, fn, tn};
           }),
           "tp"_a = 0, "fp"_a = 0, "fn"_a = 0, "tn"_a = 0)
      .def_readwrite("tp", &ConfusionCounts::tp)
      .def_readwrite("fp", &ConfusionCounts::fp)
      .def_readwrite("fn", &ConfusionCounts::fn)
      .def_readwrite("tn", &ConfusionCounts::tn)
      .def("total", &ConfusionCounts::total)
      .def("__repr__", [](const ConfusionCounts& c) {
        std::ostringstream oss;
        oss << "ConfusionCounts(tp=" << c.tp << ", fp=" << c.fp
            << ", fn=" << c.fn << ", tn=" << c.tn << ")";
        return oss.str();
      });

  py::class_<MetricsReport>(m, "MetricsReport")
      .def_readonly("iou", &MetricsReport::iou)
      .def_readonly("precision", &MetricsReport::precision)
      .def_readonly("recall", &MetricsReport::recall)
      .def_readonly("f1", &MetricsReport::f1)
      .def_readonly("fnr", &MetricsReport::fnr)
      .def_readonly("fpr", &MetricsReport::fpr)
      .def_readonly("tnr", &MetricsReport::tnr)
      .def_readonly("auc_roc", &MetricsReport::auc_roc)
      .def_readonly("confusion", &MetricsReport::confusion);

  py::class_<RocPoint>(m, "RocPoint")
      .def_readonly("threshold_hz", &RocPoint::threshold_hz)
      .def_readonly("fpr", &RocPoint::fpr)
      .def_readonly("tpr", &RocPoint::tpr);

  py::class_<RocCurve>(m, "RocCurve")
      .def_readonly("points", &RocCurve::points);

  py::class_<RocResult>(m, "RocResult")
      .def_readonly("curve", &RocResult::curve)
      .def_readonly("auc", &RocResult::auc);

  m.def("confusion", &confusion, "dm"_a, "gtm"_a,
        "Pixel-wise confusion with the 0 = defect convention.");
  m.def("compute_metrics", &compute_metrics, "counts"_a,
        "Confusion-based metrics; 0/0 cases come back as None.");
  m.def("roc_auc", &roc_auc, "score_grid"_a, "gtm"_a,
        "ROC over defect scores -f(x,y) with trapezoidal AUC.");
  m.def("evaluate_slab", &evaluate_slab, "dm"_a, "score_grid"_a, "gtm"_a,
        "Full per-slab evaluation against the ground-truth raster.");

  // -- synthesis ------------------------------------------------------------

  py::class_<CellRect>(m, "CellRect")
      .def(py::init([](int row, int col, int rows, int cols) {
             return CellRect{row, col, rows, cols};
           }),
           "row"_a = 0, "col"_a = 0, "rows"_a = 0, "cols"_a = 0)
      .def_readwrite("row", &CellRect::row)
      .def_readwrite("col", &CellRect::col)
      .def_readwrite("rows", &CellRect::rows)
      .def_readwrite("cols", &CellRect::cols);

  py::class_<SynthConfig>(m, "SynthConfig")
      .def(py::init<>())
      .def_readwrite("shape", &SynthConfig::shape)
      .def_readwrite("sample_rate_hz", &SynthConfig::sample_rate_hz)
      .def_readwrite("n_samples", &SynthConfig::n_samples)
      .def_property("defect_band_hz", band_getter(&SynthConfig::defect_band_hz),
                    band_setter(&SynthConfig::defect_band_hz))
      .def_property("intact_band_hz", band_getter(&SynthConfig::intact_band_hz),
                    band_setter(&SynthConfig::intact_band_hz))
      .def_readwrite("decay_tau_s", &SynthConfig::decay_tau_s)
      .def_readwrite("noise_sigma", &SynthConfig::noise_sigma)
      .def_readwrite("seed", &SynthConfig::seed)
      .def_readwrite("snap_tones", &SynthConfig::snap_tones)
      // None -> default layout for the shape; an empty list plants nothing.
      .def_readwrite("defects", &SynthConfig::defects)
      .def_readwrite("slab_id", &SynthConfig::slab_id);

  m.def("snap_to_bin", &snap_to_bin, "f_hz"_a, "sample_rate_hz"_a, "n_samples"_a,
        "Nearest spectrum bin center k*fs/n, ties to the lower bin.");
  m.def("default_defect_layout", &default_defect_layout, "shape"_a,
        "Proportional default defect rectangles for a grid shape.");
  m.def("generate_slab", &generate_slab, "cfg"_a,
        "Seeded synthetic slab plus the matching defect spec.");

  // -- pipeline -------------------------------------------------------------

  py::class_<AnalysisResult>(m, "AnalysisResult")
      .def_readonly("slab_id", &AnalysisResult::slab_id)
      .def_readonly("global_grid", &AnalysisResult::global_grid)
      .def_readonly("histogram", &AnalysisResult::histogram)
      .def_readonly("ranges", &AnalysisResult::ranges)
      .def_readonly("pair", &AnalysisResult::pair)
      .def_readonly("low_grid", &AnalysisResult::low_grid)
      .def_readonly("binary", &AnalysisResult::binary)
      .def_readonly("threshold_hz", &AnalysisResult::threshold_hz)
      .def_readonly("cluster", &AnalysisResult::cluster)
      .def_readonly("model", &AnalysisResult::model);

  py::class_<EvaluationResult>(m, "EvaluationResult")
      .def_readonly("binary", &EvaluationResult::binary)
      .def_readonly("cluster", &EvaluationResult::cluster)
      .def_readonly("roc", &EvaluationResult::roc)
      .def_readonly("gtm", &EvaluationResult::gtm);

  m.def("analyze", &analyze, "rec"_a, "cfg"_a = ThresholdConfig{}, "seed"_a = 0,
        "Full detection pipeline: pass 1, adaptive thresholding, pass 2, "
        "binary mask and cluster map.");
  m.def("evaluate_analysis", &evaluate_analysis, "analysis"_a, "spec"_a,
        "Both mask evaluations plus the ROC curve for one slab.");

  m.def("histogram_report_json", &histogram_report_json, "analysis"_a);
  m.def("histogram_csv", &histogram_csv, "histogram"_a);
  m.def("roc_csv", &roc_csv, "curve"_a);
  m.def("cluster_report_json", &cluster_report_json, "analysis"_a);
  m.def("metrics_json", &metrics_json, "slab_id"_a, "mask_type"_a, "report"_a);

  // -- text formats ---------------------------------------------------------

  m.def("grid_csv", &grid_csv, "grid"_a,
        "Frequency grid as rows x cols CSV of exact-text Hz values.");
  m.def("parse_grid_csv", &parse_grid_csv, "text"_a);
  m.def("fnv1a64_hex", &fnv1a64_hex, "data"_a,
        "FNV-1a 64-bit content hash, lowercase hex.");
}

}  // namespace echomap

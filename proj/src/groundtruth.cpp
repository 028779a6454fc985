#include "echomap/groundtruth.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "echomap/errors.hpp"
#include "echomap/io.hpp"

namespace echomap {

namespace {

using json = nlohmann::ordered_json;

// Pixel-center nearest-neighbor mapping from a raster axis of `px` pixels
// onto a grid axis of `cells` cells.
int nn_cell(int pixel, int px, int cells) {
  const int cell = static_cast<int>(((2 * pixel + 1) * static_cast<long long>(cells)) / (2 * px));
  return cell < cells ? cell : cells - 1;
}

void check_spec(const DefectSpec& spec) {
  if (!(spec.slab_w_m > 0.0) || !(spec.slab_h_m > 0.0)) {
    throw DataError("defect spec: slab_size_m must be positive");
  }
  if (spec.px_w < 1 || spec.px_h < 1) {
    throw DataError("defect spec: raster_px must be at least 1x1");
  }
  for (const auto& d : spec.defects) {
    if (!(d.w_m > 0.0) || !(d.h_m > 0.0)) {
      throw DataError("defect spec: rectangle '" + d.label + "' has non-positive size");
    }
    if (d.x_m < 0.0 || d.y_m < 0.0 || d.x_m + d.w_m > spec.slab_w_m ||
        d.y_m + d.h_m > spec.slab_h_m) {
      throw DataError("defect spec: defect out of bounds ('" + d.label + "')");
    }
  }
}

}  // namespace

DefectSpec parse_defect_spec_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DataError(std::string("defect spec: ") + e.what());
  }
  DefectSpec spec;
  try {
    spec.slab_id = doc.at("slab_id").get<std::string>();
    spec.slab_w_m = doc.at("slab_size_m").at(0).get<double>();
    spec.slab_h_m = doc.at("slab_size_m").at(1).get<double>();
    spec.px_w = doc.at("raster_px").at(0).get<int>();
    spec.px_h = doc.at("raster_px").at(1).get<int>();
    for (const auto& d : doc.at("defects")) {
      DefectRect r;
      r.x_m = d.at("x_m").get<double>();
      r.y_m = d.at("y_m").get<double>();
      r.w_m = d.at("w_m").get<double>();
      r.h_m = d.at("h_m").get<double>();
      r.label = d.at("label").get<std::string>();
      spec.defects.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("defect spec: ") + e.what());
  }
  check_spec(spec);
  return spec;
}

DefectSpec parse_defect_spec(const std::string& path) {
  try {
    return parse_defect_spec_json(read_text_file(path));
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

void write_defect_spec(const DefectSpec& spec, const std::string& path) {
  json doc;
  doc["slab_id"] = spec.slab_id;
  doc["slab_size_m"] = {spec.slab_w_m, spec.slab_h_m};
  doc["raster_px"] = {spec.px_w, spec.px_h};
  json defects = json::array();
  for (const auto& d : spec.defects) {
    json r;
    r["x_m"] = d.x_m;
    r["y_m"] = d.y_m;
    r["w_m"] = d.w_m;
    r["h_m"] = d.h_m;
    r["label"] = d.label;
    defects.push_back(std::move(r));
  }
  doc["defects"] = std::move(defects);
  write_text_file(path, doc.dump(2) + "\n");
}

GroundTruthMask rasterize_gtm(const DefectSpec& spec) {
  check_spec(spec);
  GroundTruthMask gtm;
  gtm.spec_id = spec.slab_id;
  gtm.mask.shape = GridShape{spec.px_h, spec.px_w};
  gtm.mask.values.assign(static_cast<std::size_t>(spec.px_w) * spec.px_h, 1);

  const double sx = spec.slab_w_m / spec.px_w;
  const double sy = spec.slab_h_m / spec.px_h;
  for (int i = 0; i < spec.px_h; ++i) {
    const double cy = (i + 0.5) * sy;
    for (int j = 0; j < spec.px_w; ++j) {
      const double cx = (j + 0.5) * sx;
      for (const auto& d : spec.defects) {
        if (cx >= d.x_m && cx < d.x_m + d.w_m && cy >= d.y_m && cy < d.y_m + d.h_m) {
          gtm.mask.values[static_cast<std::size_t>(i) * spec.px_w + j] = 0;
          break;
        }
      }
    }
  }
  return gtm;
}

std::pair<BinaryMask, BinaryMask> align_masks(const BinaryMask& dm,
                                              const GroundTruthMask& gtm) {
  const GridShape out = gtm.mask.shape;
  BinaryMask up;
  up.shape = out;
  up.values.resize(static_cast<std::size_t>(out.cell_count()));
  for (int i = 0; i < out.rows; ++i) {
    const int r = nn_cell(i, out.rows, dm.shape.rows);
    for (int j = 0; j < out.cols; ++j) {
      const int c = nn_cell(j, out.cols, dm.shape.cols);
      up.values[static_cast<std::size_t>(out.index_of(i, j))] = dm.at(r, c);
    }
  }
  return {std::move(up), gtm.mask};
}

BinaryMask downsample_majority(const BinaryMask& gtm, const GridShape& shape) {
  std::vector<long long> defect(static_cast<std::size_t>(shape.cell_count()), 0);
  std::vector<long long> total(static_cast<std::size_t>(shape.cell_count()), 0);
  for (int i = 0; i < gtm.shape.rows; ++i) {
    const int r = nn_cell(i, gtm.shape.rows, shape.rows);
    for (int j = 0; j < gtm.shape.cols; ++j) {
      const int c = nn_cell(j, gtm.shape.cols, shape.cols);
      const auto idx = static_cast<std::size_t>(shape.index_of(r, c));
      ++total[idx];
      if (gtm.at(i, j) == 0) ++defect[idx];
    }
  }
  BinaryMask out;
  out.shape = shape;
  out.values.resize(static_cast<std::size_t>(shape.cell_count()));
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    if (total[i] == 0) {
      // A grid coarser than the raster cannot leave cells uncovered, but a
      // finer one can; uncovered cells default to non-defect.
      out.values[i] = 1;
    } else {
      out.values[i] = 2 * defect[i] >= total[i] ? 0 : 1;
    }
  }
  return out;
}

}  // namespace echomap

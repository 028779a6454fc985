#pragma once

#include <string>
#include <utility>
#include <vector>

#include "echomap/detect.hpp"

namespace echomap {

struct DefectRect {
  double x_m{0.0};
  double y_m{0.0};
  double w_m{0.0};
  double h_m{0.0};
  std::string label;
};

// Declarative defect layout for one slab: physical size, raster resolution
// and axis-aligned defect rectangles (y-down, origin at the top-left).
struct DefectSpec {
  std::string slab_id;
  double slab_w_m{0.0};
  double slab_h_m{0.0};
  int px_w{0};
  int px_h{0};
  std::vector<DefectRect> defects;
};

struct GroundTruthMask {
  BinaryMask mask;      // 0 = defect pixel, 1 = non-defect pixel
  std::string spec_id;  // provenance
};

// Parses and validates a defect spec JSON file. Throws DataError for
// malformed files, non-positive sizes or out-of-bounds rectangles.
DefectSpec parse_defect_spec(const std::string& path);
DefectSpec parse_defect_spec_json(const std::string& text);
void write_defect_spec(const DefectSpec& spec, const std::string& path);

// Pixel-center point sampling: pixel (i,j) is 0 iff its center lies inside
// any rectangle (closed on low edges, open on high edges).
GroundTruthMask rasterize_gtm(const DefectSpec& spec);

// Upsamples the detection mask to the GTM raster by nearest-neighbor block
// replication; both results share the GTM's dimensions.
std::pair<BinaryMask, BinaryMask> align_masks(const BinaryMask& dm,
                                              const GroundTruthMask& gtm);

// Majority vote of GTM pixels per grid cell; ties count as defect.
BinaryMask downsample_majority(const BinaryMask& gtm, const GridShape& shape);

}  // namespace echomap

#include "echomap/slab.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "echomap/errors.hpp"
#include "echomap/io.hpp"

namespace echomap {

namespace {

using json = nlohmann::ordered_json;

std::string cell_name(const GridShape& shape, int index) {
  const auto rc = shape.cell_of(index);
  std::ostringstream os;
  os << "(" << rc[0] << "," << rc[1] << ")";
  return os.str();
}

}  // namespace

std::vector<std::string> validate(const SlabRecording& rec) {
  std::vector<std::string> violations;
  if (rec.shape.rows < 1 || rec.shape.cols < 1) {
    violations.push_back("grid shape must be at least 1x1");
    return violations;
  }
  const std::size_t expected = static_cast<std::size_t>(rec.shape.cell_count());
  if (rec.readings.size() != expected) {
    std::ostringstream os;
    os << "reading count mismatch: " << rec.readings.size() << " readings for "
       << rec.shape.rows << "x" << rec.shape.cols << " grid";
    violations.push_back(os.str());
    return violations;
  }

  const double rate = rec.readings.front().sample_rate_hz;
  const std::size_t len = rec.readings.front().size();
  if (!(std::isfinite(rate) && rate > 0.0)) {
    violations.push_back("sample_rate must be finite and positive");
  }
  if (len < 2) {
    violations.push_back("readings must have at least 2 samples");
  }

  bool rate_flagged = false, len_flagged = false, finite_flagged = false;
  for (std::size_t i = 0; i < rec.readings.size(); ++i) {
    const auto& ts = rec.readings[i];
    if (!rate_flagged && ts.sample_rate_hz != rate) {
      violations.push_back("sample_rate mismatch at cell " +
                           cell_name(rec.shape, static_cast<int>(i)));
      rate_flagged = true;
    }
    if (!len_flagged && ts.size() != len) {
      violations.push_back("inconsistent reading lengths at cell " +
                           cell_name(rec.shape, static_cast<int>(i)));
      len_flagged = true;
    }
    if (!finite_flagged) {
      for (double a : ts.amplitudes) {
        if (!std::isfinite(a)) {
          violations.push_back("non-finite amplitude at cell " +
                               cell_name(rec.shape, static_cast<int>(i)));
          finite_flagged = true;
          break;
        }
      }
    }
  }
  return violations;
}

SlabRecording load_slab(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw DataError("slab file " + path + ": " + e.what());
  }

  SlabRecording rec;
  try {
    rec.slab_id = doc.at("slab_id").get<std::string>();
    rec.shape.rows = doc.at("rows").get<int>();
    rec.shape.cols = doc.at("cols").get<int>();
    const double rate = doc.at("sample_rate_hz").get<double>();
    if (doc.contains("cell_size_m")) {
      const auto& cs = doc.at("cell_size_m");
      rec.cell_size_m = std::array<double, 2>{cs.at(0).get<double>(), cs.at(1).get<double>()};
    }
    const auto& readings = doc.at("readings");
    rec.readings.reserve(readings.size());
    for (const auto& r : readings) {
      TimeSeries ts;
      ts.sample_rate_hz = rate;
      ts.amplitudes = r.get<std::vector<double>>();
      rec.readings.push_back(std::move(ts));
    }
  } catch (const json::exception& e) {
    throw DataError("slab file " + path + ": " + e.what());
  }
  if (rec.readings.empty()) {
    throw DataError("slab file " + path + ": no readings");
  }

  const auto violations = validate(rec);
  if (!violations.empty()) {
    std::string msg = "slab file " + path + ":";
    for (const auto& v : violations) msg += " " + v + ";";
    msg.pop_back();
    throw DataError(msg);
  }
  return rec;
}

void write_slab(const SlabRecording& rec, const std::string& path) {
  json doc;
  doc["slab_id"] = rec.slab_id;
  doc["rows"] = rec.shape.rows;
  doc["cols"] = rec.shape.cols;
  doc["sample_rate_hz"] = rec.readings.empty() ? 0.0 : rec.readings.front().sample_rate_hz;
  if (rec.cell_size_m) {
    doc["cell_size_m"] = {(*rec.cell_size_m)[0], (*rec.cell_size_m)[1]};
  }
  json readings = json::array();
  for (const auto& ts : rec.readings) readings.push_back(ts.amplitudes);
  doc["readings"] = std::move(readings);
  write_text_file(path, doc.dump() + "\n");
}

}  // namespace echomap

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "echomap/errors.hpp"
#include "echomap/io.hpp"
#include "echomap/slab.hpp"
#include "support/builders.hpp"

using namespace echomap;

namespace {

SlabRecording sample_recording() {
  SlabRecording rec;
  rec.slab_id = "slab-a";
  rec.shape = {2, 3};
  rec.cell_size_m = {{0.25, 0.25}};
  for (int i = 0; i < 6; ++i) {
    TimeSeries ts;
    ts.sample_rate_hz = 500000.0;
    ts.amplitudes = {0.1 * i, -0.5, 1.0 / 3.0, 5e-324, std::numbers::pi};
    rec.readings.push_back(std::move(ts));
  }
  return rec;
}

}  // namespace

TEST_CASE("grid index mapping is a row-major bijection") {
  const GridShape shape{3, 5};
  int expected = 0;
  for (int r = 0; r < shape.rows; ++r) {
    for (int c = 0; c < shape.cols; ++c) {
      CHECK(shape.index_of(r, c) == expected);
      CHECK(shape.cell_of(expected) == std::array<int, 2>{r, c});
      ++expected;
    }
  }
  CHECK(expected == shape.cell_count());
}

TEST_CASE("slab files round-trip bit-exactly") {
  builders::TempDir tmp;
  const auto rec = sample_recording();
  write_slab(rec, tmp.file("slab.json"));
  const auto back = load_slab(tmp.file("slab.json"));

  CHECK(back.slab_id == rec.slab_id);
  CHECK(back.shape == rec.shape);
  REQUIRE(back.cell_size_m.has_value());
  CHECK(*back.cell_size_m == *rec.cell_size_m);
  REQUIRE(back.readings.size() == rec.readings.size());
  for (std::size_t i = 0; i < rec.readings.size(); ++i) {
    CHECK(back.readings[i].sample_rate_hz == rec.readings[i].sample_rate_hz);
    CHECK(back.readings[i].amplitudes == rec.readings[i].amplitudes);
  }
}

TEST_CASE("cell size is optional metadata") {
  builders::TempDir tmp;
  auto rec = sample_recording();
  rec.cell_size_m.reset();
  write_slab(rec, tmp.file("slab.json"));
  CHECK_FALSE(load_slab(tmp.file("slab.json")).cell_size_m.has_value());
}

TEST_CASE("validate accepts a consistent recording") {
  CHECK(validate(sample_recording()).empty());
}

TEST_CASE("validate reports a reading count mismatch") {
  auto rec = sample_recording();
  rec.readings.pop_back();
  const auto problems = validate(rec);
  REQUIRE(problems.size() == 1);
  CHECK(problems[0].find("reading count mismatch") != std::string::npos);
}

TEST_CASE("validate reports mixed sample rates with the offending cell") {
  auto rec = sample_recording();
  rec.readings[4].sample_rate_hz = 250000.0;
  const auto problems = validate(rec);
  REQUIRE(problems.size() == 1);
  CHECK(problems[0].find("sample_rate mismatch") != std::string::npos);
  CHECK(problems[0].find("(1,1)") != std::string::npos);
}

TEST_CASE("validate reports inconsistent reading lengths") {
  auto rec = sample_recording();
  rec.readings[2].amplitudes.push_back(0.0);
  const auto problems = validate(rec);
  REQUIRE(problems.size() == 1);
  CHECK(problems[0].find("inconsistent reading lengths") != std::string::npos);
  CHECK(problems[0].find("(0,2)") != std::string::npos);
}

TEST_CASE("validate reports non-finite amplitudes") {
  auto rec = sample_recording();
  rec.readings[1].amplitudes[3] = std::numeric_limits<double>::quiet_NaN();
  const auto problems = validate(rec);
  REQUIRE(problems.size() == 1);
  CHECK(problems[0].find("non-finite amplitude") != std::string::npos);
  CHECK(problems[0].find("(0,1)") != std::string::npos);
}

TEST_CASE("validate reports each violated invariant once") {
  auto rec = sample_recording();
  rec.readings[1].sample_rate_hz = 1.0;
  rec.readings[2].sample_rate_hz = 2.0;
  rec.readings[3].amplitudes.assign(2, 0.0);
  CHECK(validate(rec).size() == 2);
}

TEST_CASE("load_slab rejects a missing file") {
  CHECK_THROWS_AS(load_slab("/nonexistent/slab.json"), DataError);
}

TEST_CASE("load_slab rejects malformed JSON") {
  builders::TempDir tmp;
  write_text_file(tmp.file("bad.json"), "{not json");
  CHECK_THROWS_AS(load_slab(tmp.file("bad.json")), DataError);
}

TEST_CASE("load_slab rejects an invalid recording") {
  builders::TempDir tmp;
  auto rec = sample_recording();
  rec.readings.pop_back();
  write_slab(rec, tmp.file("short.json"));
  CHECK_THROWS_AS(load_slab(tmp.file("short.json")), DataError);
}

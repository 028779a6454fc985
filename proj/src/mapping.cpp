#include "echomap/mapping.hpp"

#include "echomap/errors.hpp"

namespace echomap {

std::vector<Spectrum> cell_spectra(const SlabRecording& rec) {
  std::vector<Spectrum> spectra;
  spectra.reserve(rec.readings.size());
  for (const auto& ts : rec.readings) {
    spectra.push_back(compute_spectrum(normalize(ts)));
  }
  return spectra;
}

FrequencyGrid frequency_grid_from_spectra(const GridShape& shape,
                                          const std::vector<Spectrum>& spectra,
                                          const std::optional<FrequencyRange>& band) {
  if (spectra.size() != static_cast<std::size_t>(shape.cell_count())) {
    throw DataError("frequency grid: spectrum count does not match grid shape");
  }
  FrequencyGrid grid;
  grid.shape = shape;
  grid.values_hz.reserve(spectra.size());
  for (const auto& sp : spectra) {
    grid.values_hz.push_back(dominant_frequency(sp, band));
  }
  return grid;
}

FrequencyGrid global_frequency_grid(const SlabRecording& rec) {
  return frequency_grid_from_spectra(rec.shape, cell_spectra(rec), std::nullopt);
}

FrequencyGrid low_band_frequency_grid(const SlabRecording& rec, const RangePair& pair) {
  return frequency_grid_from_spectra(rec.shape, cell_spectra(rec), pair.low);
}

}  // namespace echomap

#pragma once

#include <stdexcept>
#include <string>

namespace echomap {

// Input files or in-memory data violate a structural contract
// (malformed JSON, reading count mismatch, non-finite samples, ...).
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// The detection method's premise does not hold for the data
// (degenerate distribution, no frequency separation, ...).
struct MethodError : std::runtime_error {
  explicit MethodError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace echomap

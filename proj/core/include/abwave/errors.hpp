#pragma once

#include <stdexcept>
#include <string>

namespace abwave {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical errors (CLI exit code 3).
struct QuadratureNonConvergence : Error {
  using Error::Error;
};
struct DegenerateGeometry : Error {
  using Error::Error;
};

// Contract violations on operation inputs.
struct OpenPathError : Error {
  using Error::Error;
};
struct StationMismatch : Error {
  using Error::Error;
};
struct ChannelMismatch : Error {
  using Error::Error;
};
struct NonpositiveWavelength : Error {
  using Error::Error;
};
struct TooFewFringes : Error {
  using Error::Error;
};
struct GridMismatch : Error {
  using Error::Error;
};
struct UnknownScenario : Error {
  using Error::Error;
};

// Scenario validation (CLI exit code 2).
struct ValidationError : Error {
  std::string field;
  ValidationError(std::string field_, const std::string& message)
      : Error(field_ + ": " + message), field(std::move(field_)) {}
};

// Scenario file syntax (CLI exit code 2).
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& message)
      : Error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

}  // namespace abwave

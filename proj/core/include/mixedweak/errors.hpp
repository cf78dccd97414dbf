#pragma once

#include <stdexcept>
#include <string>

namespace mixedweak {

// Input / configuration problems. The CLI maps these to exit code 2.
struct ValidationError : std::invalid_argument {
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct GridError : ValidationError {
  explicit GridError(const std::string& msg) : ValidationError("grid: " + msg) {}
};

// Two step functions that must share a grid do not.
struct GridMismatchError : ValidationError {
  explicit GridMismatchError(const std::string& msg)
      : ValidationError("grid mismatch: " + msg) {}
};

// A power weight with a non-integrable singularity meets a cell touching x = 0.
struct SingularCellError : ValidationError {
  explicit SingularCellError(const std::string& msg)
      : ValidationError("singular cell: " + msg) {}
};

// A weight that must be strictly positive has a zero cell.
struct ZeroWeightError : ValidationError {
  explicit ZeroWeightError(const std::string& msg)
      : ValidationError("zero weight: " + msg) {}
};

// An interval average that appears in a denominator is zero.
struct ZeroAverageError : ValidationError {
  explicit ZeroAverageError(const std::string& msg)
      : ValidationError("zero average: " + msg) {}
};

struct ZeroMassError : ValidationError {
  explicit ZeroMassError(const std::string& msg)
      : ValidationError("zero mass: " + msg) {}
};

struct ExponentError : ValidationError {
  explicit ExponentError(const std::string& msg)
      : ValidationError("exponent: " + msg) {}
};

struct ResolutionError : ValidationError {
  explicit ResolutionError(const std::string& msg)
      : ValidationError("resolution: " + msg) {}
};

// Numeric failures discovered while running. The CLI maps these to exit code 3.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// The iteration series stopped decaying geometrically (norm bound too small).
struct DivergenceError : NumericError {
  explicit DivergenceError(const std::string& msg)
      : NumericError("divergence: " + msg) {}
};

}  // namespace mixedweak

#pragma once

#include <stdexcept>
#include <string>

namespace cxr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor/layer shape disagreement.
struct ShapeError : Error {
  using Error::Error;
};

// An operation produced or received a NaN/Inf.
struct NumericError : Error {
  using Error::Error;
};

// Malformed manifest, config or map file; message carries the row/field.
struct ParseError : Error {
  using Error::Error;
};

// Invalid configuration value (out-of-range threshold, bad grid, ...).
struct ConfigError : Error {
  using Error::Error;
};

// Operation called out of order (e.g. backward before forward).
struct StateError : Error {
  using Error::Error;
};

// File I/O failure or corrupt on-disk artifact.
struct IoError : Error {
  using Error::Error;
};

// On-disk format version not understood by this build.
struct VersionError : IoError {
  using IoError::IoError;
};

// Two model topologies that were required to match do not.
struct IncompatibilityError : Error {
  using Error::Error;
};

}  // namespace cxr

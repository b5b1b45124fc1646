#pragma once

#include <stdexcept>
#include <string>

namespace pontryagin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different fields or different generator tables.
class IncompatibleContext : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a homogeneous element received a mixed one.
class HomogeneityError : public Error {
 public:
  using Error::Error;
};

/// Malformed element, scalar, series expression or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Invalid presentation data: duplicate names, bad degrees, unknown presets.
class PresentationError : public Error {
 public:
  using Error::Error;
};

/// A relation could not be turned into a rewrite rule.
class OrientationError : public Error {
 public:
  using Error::Error;
};

/// A degree slice exceeds the configured word cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Power-series arithmetic failure (non-invertible denominator, overflow).
class SeriesError : public Error {
 public:
  using Error::Error;
};

}  // namespace pontryagin

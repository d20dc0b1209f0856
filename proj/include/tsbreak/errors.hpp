#pragma once

#include <stdexcept>
#include <string>

namespace tsbreak {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// Series too short for the requested operation.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Zero-variance or otherwise degenerate input series.
class DegenerateSeriesError : public Error {
 public:
  using Error::Error;
};

/// A numerical recursion broke down (non-finite value, non-positive
/// prediction variance, singular system).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Model violates causality/invertibility requirements.
class InvalidModelError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver hit its iteration cap. Subclasses carry the best
/// iterate found so far.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Input file/stream does not match the expected format.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Input parses but fails a quality gate (reject rate, continuity).
class DataQualityError : public Error {
 public:
  using Error::Error;
};

}  // namespace tsbreak

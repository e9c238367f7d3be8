#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hhquad {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error while parsing an expression. `offset` is the byte position
/// in the input text where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation left the mathematical domain of an elementary function
/// (log of a non-positive value, division by zero, ...) or produced a
/// non-finite value. When raised from an expression tree the message names
/// the offending node and its position in the source text.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid curvature data (manual m > M, wrong mode for the operation).
class CurvatureError : public Error {
 public:
  using Error::Error;
};

/// A bounds kernel was applied outside its hypothesis, or intersecting the
/// kernel intervals produced an empty set.
class EnclosureError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration (flags, job fields, quadrature settings).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Failure inside a quadrature driver; carries the offending panel.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& message, double panel_lo, double panel_hi)
      : Error(message + " (panel [" + std::to_string(panel_lo) + ", " +
              std::to_string(panel_hi) + "])"),
        panel_lo_(panel_lo),
        panel_hi_(panel_hi) {}

  double panel_lo() const { return panel_lo_; }
  double panel_hi() const { return panel_hi_; }

 private:
  double panel_lo_;
  double panel_hi_;
};

}  // namespace hhquad

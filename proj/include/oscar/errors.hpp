#pragma once

#include <stdexcept>
#include <string>

namespace oscar {

/// Base class for every error this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file (bad CSV cell, bad JSON, ...). Message carries the location.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid data: duplicate tickers, dimension mismatch, bad argument.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Semantically bad data values (non-positive price, empty universe, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Cholesky pivot failure. `pivot` is the 0-based index of the failing pivot.
class NotPositiveDefiniteError : public Error {
 public:
  NotPositiveDefiniteError(int pivot, double value)
      : Error("matrix is not positive definite: pivot " + std::to_string(pivot) +
              " = " + std::to_string(value)),
        pivot(pivot),
        pivot_value(value) {}
  int pivot;
  double pivot_value;
};

/// The jitter ladder was exhausted without producing a factorizable matrix.
class IrrecoverableMatrixError : public Error {
 public:
  using Error::Error;
};

/// mu is the zero vector: no tangent direction exists.
class NoDirectionError : public Error {
 public:
  using Error::Error;
};

/// Portfolio variance is zero (or numerically indistinguishable from it).
class DegenerateRiskError : public Error {
 public:
  using Error::Error;
};

/// A transformed portfolio vector has zero norm; the angle is undefined.
class DegenerateAngleError : public Error {
 public:
  using Error::Error;
};

/// Performance ratio against a non-positive reference Sharpe ratio.
class UndefinedRatioError : public Error {
 public:
  using Error::Error;
};

/// Invalid synthetic-instance specification.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search could not evaluate a single subset.
class OracleError : public Error {
 public:
  using Error::Error;
};

/// Bad CLI / run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace oscar

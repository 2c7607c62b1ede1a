#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qse {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Tensor or matrix dimensions that do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFeature : public Error {
 public:
  using Error::Error;
};

/// Overlapping or out-of-range orbital index sets.
class PartitionError : public Error {
 public:
  using Error::Error;
};

/// Operator label that contradicts the declared partition.
class LabelError : public Error {
 public:
  using Error::Error;
};

class UnitarityError : public Error {
 public:
  using Error::Error;
};

/// Every metric eigenvalue fell below the truncation threshold.
class DegenerateMetricError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An RDM of the given particle rank was needed but not supplied.
class MissingDataError : public Error {
 public:
  explicit MissingDataError(int rank)
      : Error("missing " + std::to_string(rank) + "-RDM"), rank_(rank) {}
  int rank() const noexcept { return rank_; }

 private:
  int rank_;
};

/// Iterative solver stopped without meeting its threshold.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_energy)
      : Error(what), last_energy_(last_energy) {}
  double last_energy() const noexcept { return last_energy_; }

 private:
  double last_energy_;
};

}  // namespace qse

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lifecode {

// Domain and constraint violations. The CLI maps these to exit code 1.
class ConstraintError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input or invalid arguments. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidSizeError : public InputError {
 public:
  using InputError::InputError;
};

class ShapeError : public InputError {
 public:
  using InputError::InputError;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A Strict-policy population step produced a negative species population.
class InfeasibleError : public ConstraintError {
 public:
  InfeasibleError(std::size_t species, double value, std::size_t step = 0)
      : ConstraintError("infeasible step " + std::to_string(step) + ": species " + std::to_string(species) +
                        " would become negative (" + std::to_string(value) + ")"),
        species_(species),
        value_(value),
        step_(step) {}

  std::size_t species() const noexcept { return species_; }
  double value() const noexcept { return value_; }
  /// 1-based index of the step that failed within an evolution run.
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t species_;
  double value_;
  std::size_t step_;
};

/// An evolution matrix column does not sum to the required value.
class ColumnSumError : public ConstraintError {
 public:
  ColumnSumError(std::size_t column, double sum, double expected)
      : ConstraintError("column " + std::to_string(column) + " sums to " + std::to_string(sum) +
                        ", expected " + std::to_string(expected)),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Requested work exceeds a configured desk-scale guard.
class ResourceError : public ConstraintError {
 public:
  using ConstraintError::ConstraintError;
};

/// Parse failure in a text input, with the 1-based line it occurred on.
class ParseError : public InputError {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lifecode

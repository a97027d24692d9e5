#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superrad {

/// Bad user input: names the offending field so the CLI can report it.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Initial data not numerically supported inside the computational domain.
class SupportError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Failures of the numerics themselves (non-convergence, singular solves, NaN).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularSystemError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonFiniteStateError : public NumericalError {
 public:
  NonFiniteStateError(std::size_t step, const std::string& what)
      : NumericalError("step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace superrad

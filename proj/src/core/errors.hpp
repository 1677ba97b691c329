#pragma once

#include <stdexcept>
#include <string>

namespace stnp {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Mismatched array / grid sizes.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Invalid or inconsistent run configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite values or breakdown inside a numerical routine.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive stepper could not produce an accepted step above dt_min.
struct StepFailure : NumericalError {
  StepFailure(const std::string& msg, double t_, double dt_)
      : NumericalError(msg), t(t_), dt(dt_) {}
  double t;
  double dt;
};

}  // namespace stnp

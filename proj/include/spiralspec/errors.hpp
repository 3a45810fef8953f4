// SPDX-License-Identifier: Apache-2.0

#ifndef SPIRALSPEC_ERRORS_HPP
#define SPIRALSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spiralspec {

/// Error categories, mapped to CLI exit codes (config=2, numerical=3, io=4).
enum class ErrorKind { config, numerical, io };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(ErrorKind::config, msg) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& msg) : Error(ErrorKind::io, msg) {}
};

class NumericalError : public Error {
public:
  explicit NumericalError(const std::string& msg) : Error(ErrorKind::numerical, msg) {}
};

/// Newton failed to reach tolerance; carries the last residual norm.
class NoConvergenceError : public NumericalError {
public:
  NoConvergenceError(const std::string& msg, double last_residual)
      : NumericalError(msg), last_residual_(last_residual) {}
  double last_residual() const { return last_residual_; }

private:
  double last_residual_;
};

/// Solver collapsed onto a constant (translation-degenerate) solution.
class DegenerateSolutionError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Continuation step-size underflow; carries the last parameter value reached.
class ContinuationStalledError : public NumericalError {
public:
  ContinuationStalledError(const std::string& msg, double last_good)
      : NumericalError(msg), last_good_(last_good) {}
  double last_good() const { return last_good_; }

private:
  double last_good_;
};

/// Two candidate eigenvalues were indistinguishable at the branch predictor.
class AmbiguityError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class SimulationFailureError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class NotHyperbolicError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class WrongSplittingError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class AlphaTooLargeError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class RootFailureError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class InsufficientDataError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class PathRefinementError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class StalledBranchError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

}  // namespace spiralspec

#endif

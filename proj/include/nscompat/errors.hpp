#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nscompat {

/// Invalid sizes, mismatched parameters or grids.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (y outside [-1,1], beta = 0, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pure-Neumann problem whose right-hand side is inconsistent with its boundary flux.
class SolvabilityError : public std::runtime_error {
 public:
  SolvabilityError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// An initial field that is not admissible (no-slip or continuity violated).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, std::vector<std::string> violations)
      : std::runtime_error(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Failure inside a dense linear-algebra kernel.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nscompat

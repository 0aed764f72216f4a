#pragma once

#include <stdexcept>
#include <string>

namespace reeb {

/// Discretization too coarse for the requested band limit or resolution.
class ResolutionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a singular point of a kernel (e.g. Green's function on the diagonal).
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive integration could not proceed (step size underflow).
class StiffnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative solver failed to reach its tolerance.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double last_residual, int iterations)
      : std::runtime_error(what), last_residual_(last_residual), iterations_(iterations) {}

  double last_residual() const noexcept { return last_residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double last_residual_;
  int iterations_;
};

}  // namespace reeb

#ifndef ROGUEWAVE_ERRORS_HPP_
#define ROGUEWAVE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace roguewave {

// Bad input to a pure function (negative depth, point outside a branch).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Scenario parameters that cannot produce a valid wave configuration.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Base class for numerical failures: missing sign change, non-convergence.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoSolutionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Shock bracket does not contain a root of the defining equation.
class BracketError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Rankine-Hugoniot locus has no right state for the requested left state.
class LocusError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A material trajectory left the domain of its profile branch.
class TrajectoryError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SolverError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace roguewave

#endif  // ROGUEWAVE_ERRORS_HPP_

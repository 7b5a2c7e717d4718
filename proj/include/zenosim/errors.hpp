#pragma once

#include <stdexcept>
#include <string>

namespace zenosim {

/// Operand shapes do not agree (ket/operator dimensions).
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A physical or numerical parameter is outside its admissible range.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input that must be Hermitian is not. Carries the largest |A - A^dagger| entry.
class NotHermitianError : public std::invalid_argument {
public:
  NotHermitianError(const std::string& what, double max_deviation)
      : std::invalid_argument(what), max_deviation_(max_deviation) {}
  double max_deviation() const noexcept { return max_deviation_; }

private:
  double max_deviation_;
};

/// A closed-form expression hits a singular point (e.g. a vanishing denominator).
class SingularError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Integrator drift exceeded its hard limit; rerun with more steps.
class IntegrationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An output file cannot be written (exists without --force, or I/O failure).
class OutputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace zenosim

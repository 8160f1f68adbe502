#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qorbit {

/// Input outside an operation's domain (zero divisor, non-unit rotation,
/// type-1 point where a type-2 point is required, non-finite component).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A postcondition that should hold identically failed beyond tolerance.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed or inconsistent configuration (run files, CLI options).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A field without analytic derivatives was handed to an operation that
/// needs them.
class UnsupportedField : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integration produced a non-finite state.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, std::size_t step)
      : std::runtime_error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

}  // namespace qorbit

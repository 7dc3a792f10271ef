#pragma once

#include <stdexcept>
#include <string>

namespace huygens {

// Argument outside the physical domain of a formula (e.g. r <= 0 at the source).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Bad run parameters (non-positive speed, inverted times, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A formula was asked for a case it is not derived for.
class UnsupportedCaseError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Explicit time stepping with CFL > 1.
class StabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical procedure failed to reach its target accuracy.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double achieved, double requested)
      : std::runtime_error(what + " (achieved " + std::to_string(achieved) +
                           ", requested " + std::to_string(requested) + ")"),
        achieved_(achieved),
        requested_(requested) {}

  double achieved() const noexcept { return achieved_; }
  double requested() const noexcept { return requested_; }

 private:
  double achieved_;
  double requested_;
};

}  // namespace huygens

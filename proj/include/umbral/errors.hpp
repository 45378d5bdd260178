#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

// Raised when a Gamma-function argument lands on a pole (0, -1, -2, ...).
class GammaPole : public std::domain_error {
 public:
  explicit GammaPole(const std::string& what) : std::domain_error(what) {}
};

// Raised when an argument violates a documented precondition of a formula.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when a truncated series hits its term cap before the stop criterion.
class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace umbral

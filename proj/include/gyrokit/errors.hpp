#pragma once

#include <stdexcept>
#include <string>

namespace gyrokit {

/// Invalid physical parameters or a violated model assumption.  The message
/// names the assumption or radicand that failed.  CLI maps this to exit 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A singularity met while evaluating an otherwise valid scenario (parameter
/// of a third-kind integral reaching 1, vanishing resolvent denominator, ODE
/// step underflow).  CLI maps this to exit 3.
class SingularityError : public std::runtime_error {
 public:
  explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of a special function.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace gyrokit

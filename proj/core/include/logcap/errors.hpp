#pragma once

#include <stdexcept>
#include <string>

namespace logcap {

/// Malformed input to a constructor: reversed pair, non-finite endpoint.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Iterative kernel gave up before meeting its tolerance. Carries the
/// best value reached so callers may still inspect it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial_value, double partial_error);

  double partial_value() const noexcept { return partial_value_; }
  double partial_error() const noexcept { return partial_error_; }

 private:
  double partial_value_;
  double partial_error_;
};

class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// Text input that cannot be parsed into a set.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace logcap

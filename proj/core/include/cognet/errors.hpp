#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cognet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A quadrature or iteration failed to reach its tolerance. The best estimate
// and the error actually achieved are kept so callers can decide what to do.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double best_estimate, double achieved_error)
      : Error(what), best_estimate_(best_estimate), achieved_error_(achieved_error) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double best_estimate_;
  double achieved_error_;
};

// Invalid configuration. Carries every problem found, not just the first.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> problems);

  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

}  // namespace cognet

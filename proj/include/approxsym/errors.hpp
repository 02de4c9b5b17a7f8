#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace approxsym {

/// Malformed configuration, bad parameters or inconsistent inputs.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative solver stopped at its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::size_t iterations)
      : std::runtime_error(what + " did not converge after " + std::to_string(iterations) +
                           " iterations"),
        iterations_(iterations) {}

  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::size_t iterations_;
};

/// A random generator exhausted its retry budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace approxsym

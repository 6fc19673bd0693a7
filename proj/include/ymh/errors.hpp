#ifndef YMH_ERRORS_HPP
#define YMH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ymh {

/// Bad arguments to a library call (grid mismatch, axis out of range, ...).
class ArgumentError : public std::invalid_argument {
public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Iterative solver failed to reach its tolerance.
class SolverError : public std::runtime_error {
public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

private:
  double residual_;
};

/// Config file could not be parsed or failed validation.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

} // namespace ymh

#endif

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nonlocal {

/// Malformed or out-of-range experiment configuration.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

/// Failure while advancing a solution: CFL violation or a non-finite update.
class SolverError : public std::runtime_error {
public:
  static constexpr std::ptrdiff_t no_cell = -1;

  explicit SolverError(const std::string& what, std::ptrdiff_t cell = no_cell)
      : std::runtime_error(what), cell_(cell) {}

  /// First offending cell (0-based interior index), or no_cell.
  std::ptrdiff_t cell() const noexcept { return cell_; }

private:
  std::ptrdiff_t cell_;
};

class CflViolation : public SolverError {
public:
  using SolverError::SolverError;
};

}  // namespace nonlocal

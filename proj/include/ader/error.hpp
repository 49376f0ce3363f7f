#pragma once

#include <stdexcept>
#include <string>

namespace ader {

/// Raised when the solution leaves the admissible state set (negative density
/// or pressure, NaN) or a Riemann solver degenerates. Carries the location.
class PhysicsError : public std::runtime_error {
 public:
  explicit PhysicsError(const std::string& what) : std::runtime_error(what) {}
  PhysicsError(const std::string& what, long cell, double time)
      : std::runtime_error(what + " (cell " + std::to_string(cell) + ", t=" + std::to_string(time) + ")"),
        cell_(cell),
        time_(time) {}

  long cell() const { return cell_; }
  double time() const { return time_; }

 private:
  long cell_ = -1;
  double time_ = 0.0;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ader

#pragma once

#include <string>
#include <vector>

#include "ader/reconstruction.hpp"
#include "ader/solver.hpp"

namespace ader {

enum class Tristate { automatic, on, off };

struct RunConfig {
  std::string case_name;
  int n = 0;   // 0: case default
  int ny = 0;  // 0: case default (or n for square cases when n is given)
  std::vector<int> refine;  // mesh sequence for convergence mode
  double cfl = 0.9;
  double t_end = -1.0;  // < 0: case default
  double max_dt = 0.0;  // <= 0: no cap
  WeightMode weights = WeightMode::nonlinear;
  Tristate characteristic = Tristate::automatic;
  LimiterMode limiter = LimiterMode::off;
  std::string output_dir = "output";
  std::vector<std::string> formats{"field", "norms", "metadata"};
  std::string reference;  // explicit reference file; empty: stored default if present

  bool operator==(const RunConfig&) const = default;
};

/// Parses key=value lines; '#' starts a comment. Throws ConfigError naming
/// the offending line.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
/// Text that parse_config maps back to an equal RunConfig.
std::string serialize_config(const RunConfig& cfg);

/// Key reference for --help.
std::string config_help();

}  // namespace ader

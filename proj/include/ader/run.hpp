#pragma once

// Config-driven runs: case setup, time marching, error measurement, outputs.

#include <string>
#include <variant>
#include <vector>

#include "ader/cases.hpp"
#include "ader/config.hpp"
#include "ader/field.hpp"
#include "ader/solver.hpp"

namespace ader {

using AnyField = std::variant<std::monostate, Field1D<1>, Field1D<3>, Field2D<4>>;

struct RunReport {
  RunConfig config;
  CaseInfo info;
  int nx = 0;
  int ny = 0;
  double t_end = 0.0;
  long steps = 0;
  double wall_seconds = 0.0;
  bool characteristic = false;
  bool has_norms = false;
  Norms norms;
  std::string norms_source;  // "exact" or the reference file
  SolverCounters counters;
  /// Smallest density and pressure over the final cell averages (Euler).
  double min_density = 0.0;
  double min_pressure = 0.0;
  AnyField field;
};

/// Resolved mesh size of a config (case defaults filled in).
std::pair<int, int> resolved_mesh(const RunConfig& cfg, const CaseInfo& info);

/// Runs one case; does not write files.
RunReport execute_run(const RunConfig& cfg);

struct ConvergenceReport {
  std::vector<ConvergenceLevel> levels;
  std::vector<RunReport> runs;
  std::string table;
};

/// Runs every mesh of cfg.refine and tabulates the density errors.
ConvergenceReport execute_convergence(const RunConfig& cfg);

/// Writes the requested formats into cfg.output_dir; returns the paths.
std::vector<std::string> emit_outputs(const RunReport& report);
std::string emit_convergence(const RunConfig& cfg, const ConvergenceReport& rep);

// Individual writers, exposed for tests.
template <int NC>
void write_field_1d(const std::string& path, const Field1D<NC>& f, bool with_primitive);
void write_field_2d(const std::string& path, const Field2D<4>& f);
void write_contour_2d(const std::string& path, const Field2D<4>& f);
void write_norms(const std::string& path, const RunReport& r);
void write_metadata(const std::string& path, const RunReport& r);

std::string version_string();

}  // namespace ader

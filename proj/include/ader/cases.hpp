#pragma once

// Catalog of test problems: initial data, boundaries, exact solutions and the
// error/convergence bookkeeping used to compare against them.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ader/boundary.hpp"
#include "ader/field.hpp"
#include "ader/linalg.hpp"

namespace ader {

enum class ModelKind { burgers, advection, euler1d, euler2d };

std::string to_string(ModelKind m);

struct CaseInfo {
  std::string name;
  ModelKind model;
  int dim = 1;
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;
  int n = 100;   // default cells along x
  int ny = 0;    // default cells along y (2D)
  double t_end = 1.0;
  bool has_exact = false;
  /// Characteristic-wise reconstruction unless the run overrides it.
  bool characteristic = false;
  std::string summary;
};

const std::vector<CaseInfo>& case_catalog();
/// Throws ConfigError for names not in the catalog.
const CaseInfo& case_info(const std::string& name);

template <int NC>
struct Case1D {
  CaseInfo info;
  /// Point values of W(x, 0); at a listed discontinuity the mean of the two
  /// one-sided limits.
  std::function<Vec<NC>(double x)> initial;
  std::vector<double> breaks;
  BoundarySpec1D<NC> boundary;
  std::function<Vec<NC>(double x, double t)> exact;
};

template <int NC>
struct Case2D {
  CaseInfo info;
  std::function<Vec<NC>(double x, double y)> initial;
  /// Exact box average of the initial data when it is not smooth along the
  /// grid lines; otherwise averages use tensor Gauss rules split at the breaks.
  std::function<Vec<NC>(double xa, double xb, double ya, double yb)> initial_average;
  std::vector<double> xbreaks, ybreaks;
  BoundarySpec2D<NC> boundary;
  std::function<Vec<NC>(double x, double y, double t)> exact;
};

Case1D<1> scalar_case(const std::string& name);
Case1D<3> euler1d_case(const std::string& name);
Case2D<4> euler2d_case(const std::string& name);
/// Advection speed of the scalar cases that use linear advection.
double advection_speed(const std::string& name);

/// Mean of f over [a, b] by 10-point Gauss rules on the pieces cut by `breaks`.
template <int NC>
Vec<NC> line_average(const std::function<Vec<NC>(double)>& f, double a, double b, const std::vector<double>& breaks);

template <int NC>
Vec<NC> box_average(const std::function<Vec<NC>(double, double)>& f, double xa, double xb, double ya, double yb,
                    const std::vector<double>& xbreaks, const std::vector<double>& ybreaks);

/// Cell averages of W and, by the fundamental theorem of calculus, of its
/// derivatives.
template <int NC>
Field1D<NC> initialize_case(const Case1D<NC>& c, const Grid1D& g);
template <int NC>
Field2D<NC> initialize_case(const Case2D<NC>& c, const Grid2D& g);

/// Exact cell averages at time t (10-point Gauss per direction). Requires an
/// exact solution.
template <int NC>
std::vector<Vec<NC>> exact_averages(const Case1D<NC>& c, const Grid1D& g, double t);
template <int NC>
std::vector<Vec<NC>> exact_averages(const Case2D<NC>& c, const Grid2D& g, double t);

/// Root of w = 0.5 + sin(pi (x - w t)); Newton from `guess`, bisection on
/// [-0.5, 1.5] if Newton stalls. Valid for t <= 0.9 / pi.
double burgers_exact(double x, double t, std::optional<double> guess = std::nullopt);
inline constexpr double kBurgersShockTime = 0.31830988618379067;  // 1 / pi

//------------------------------------------------------------------------------
// Errors and convergence tables

struct Norms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// Mean absolute, root-mean-square and maximum of computed - exact.
Norms error_norms(const std::vector<double>& computed, const std::vector<double>& exact);

struct ConvergenceLevel {
  int n = 0;
  Norms norms;
};

/// log2(coarse / fine); NaN when either error is not positive.
double convergence_order(double coarse, double fine);

/// Rows L1, Order, L2, Order, Linf, Order; one column per mesh level.
std::string format_convergence_table(const std::string& title, const std::vector<ConvergenceLevel>& levels,
                                     bool two_dimensional);

//------------------------------------------------------------------------------
// Reference solutions

struct ReferenceData {
  std::string case_name;
  int n = 0;
  double t = 0.0;
  int components = 0;
  std::vector<double> x;
  std::vector<std::vector<double>> values;  // per cell
};

void write_reference(const std::string& path, const ReferenceData& ref);
ReferenceData read_reference(const std::string& path);
/// Averages the reference cells onto a grid of n cells; n must divide ref.n.
std::vector<std::vector<double>> subsample_reference(const ReferenceData& ref, int n);

/// Directory holding the stored reference files.
std::string reference_directory();
std::string reference_path(const std::string& case_name, int n);

}  // namespace ader

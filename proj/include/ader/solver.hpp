#pragma once

// Time stepping: CFL control, the conservative update of the cell averages and
// the update of the derivative averages from end-of-step interface states.

#include <limits>
#include <span>
#include <vector>

#include "ader/boundary.hpp"
#include "ader/equations.hpp"
#include "ader/field.hpp"
#include "ader/grp.hpp"
#include "ader/quadrature.hpp"
#include "ader/reconstruction.hpp"

namespace ader {

enum class LimiterMode { off, minmod };

struct SolverOptions {
  double cfl = 0.9;
  /// Upper bound on the step, used when every wavespeed vanishes.
  double max_dt = std::numeric_limits<double>::infinity();
  ReconOptions recon;
  LimiterMode limiter = LimiterMode::off;
  QuadratureRule time_rule = gauss_lobatto_4();
};

struct SolverCounters {
  long steps = 0;
  /// GRP solves and eigendecompositions, split by purpose.
  GrpStats flux_points;
  GrpStats corner_points;
  /// Face points whose end-of-step state had to be evaluated separately
  /// because the time rule does not end at tau = dt.
  long endpoint_evaluations = 0;
  long limited_cells = 0;
  ReconStats recon;
};

/// median(v, s1, s2): v clamped into the interval spanned by the one-sided
/// slopes s1, s2. Used by the derivative-average safeguard.
double limit_slope(double v, double s1, double s2);

/// The safeguard applied per (characteristic) component: the three-way
/// minmod of (v, s1, s2) in troubled cells, the median elsewhere.
double limit_slope(double v, double s1, double s2, bool troubled);

/// A stencil is troubled when its nonlinear quartic weight drops below half of
/// the linear one (evaluated with nonlinear weights even in linear mode).
bool troubled_stencil(double wm, double w0, double wp, double vm, double vp, double dx, const WeightConfig& cfg);

/// Stable step: 1D cfl dx / max|lambda|, clipped to the remaining time.
template <class Model>
double compute_dt(const Model& model, const Field1D<Model::kComps>& f, double cfl, double t_end,
                  double max_dt = std::numeric_limits<double>::infinity());

/// 2D: cfl / (max lambda_x / dx + max lambda_y / dy), clipped likewise.
template <class Model>
double compute_dt(const Model& model, const Field2D<Model::kComps>& f, double cfl, double t_end,
                  double max_dt = std::numeric_limits<double>::infinity());

/// V_j = (W(x_{j+1/2}, t+dt) - W(x_{j-1/2}, t+dt)) / dx from the n+1 face states.
template <int NC>
void update_derivative_fields(Field1D<NC>& f, std::span<const Vec<NC>> endpoint);

/// Face-state layout for the 2D update, indices as in Solver2D.
template <int NC>
struct Endpoints2D {
  std::vector<std::array<Vec<NC>, 3>> xface;  // (nx+1) x ny, Gauss points ascending in y
  std::vector<std::array<Vec<NC>, 3>> yface;  // nx x (ny+1), Gauss points ascending in x
  std::vector<Vec<NC>> corner;                // (nx+1) x (ny+1)
};

template <int NC>
void update_derivative_fields(Field2D<NC>& f, const Endpoints2D<NC>& e);

//------------------------------------------------------------------------------

template <class Model>
class Solver1D {
 public:
  static constexpr int NC = Model::kComps;
  using State = Vec<NC>;
  using Field = Field1D<NC>;

  Solver1D(const Model& model, const BoundarySpec1D<NC>& bc, const SolverOptions& opt);

  void apply_boundary(Field& f) const;
  double compute_dt(const Field& f, double t_end) const;
  /// One step of size dt; ghosts must be current.
  void advance_step(Field& f, double dt);
  /// Optional minmod-type safeguard on V; ghosts of W must be current.
  void limit_derivative_averages(Field& f);
  /// Marches to t_end; returns the number of steps taken.
  long run(Field& f, double t_end, long max_steps = std::numeric_limits<long>::max());

  const SolverCounters& counters() const { return counters_; }
  const Model& model() const { return model_; }
  const SolverOptions& options() const { return opt_; }
  /// Interface states at t+dt of the last step (reused for V, kept for checks).
  std::span<const State> last_endpoints() const { return endpoint_; }

 private:
  Model model_;
  BoundarySpec1D<NC> bc_;
  SolverOptions opt_;
  SolverCounters counters_;
  std::vector<State> flux_;
  std::vector<State> endpoint_;
  std::vector<GrpStats> thread_grp_;
  std::vector<ReconStats> thread_recon_;
};

template <class Model>
class Solver2D {
 public:
  static constexpr int NC = Model::kComps;
  using State = Vec<NC>;
  using Field = Field2D<NC>;

  Solver2D(const Model& model, const BoundarySpec2D<NC>& bc, const SolverOptions& opt);

  void apply_boundary(Field& f) const;
  double compute_dt(const Field& f, double t_end) const;
  void advance_step(Field& f, double dt);
  void limit_derivative_averages(Field& f);
  long run(Field& f, double t_end, long max_steps = std::numeric_limits<long>::max());

  const SolverCounters& counters() const { return counters_; }
  const Model& model() const { return model_; }
  const SolverOptions& options() const { return opt_; }
  const Endpoints2D<NC>& last_endpoints() const { return end_; }

  /// Field oriented so that the sweep runs along its first index; v holds
  /// the derivative along the sweep and y the transverse one.
  struct Plane {
    int na = 0, nb = 0;
    double da = 1.0, db = 1.0;
    const State *w = nullptr, *v = nullptr, *y = nullptr, *z = nullptr;
    std::size_t idx(int a, int b) const {
      return static_cast<std::size_t>(b + kGhost) * (na + 2 * kGhost) + (a + kGhost);
    }
  };

 private:
  void sweep(const Plane& p, double time, double dt, bool corners, std::vector<State>& flux,
             std::vector<std::array<State, 3>>& endpoint, std::vector<State>* corner);

  Model model_;
  BoundarySpec2D<NC> bc_;
  SolverOptions opt_;
  SolverCounters counters_;
  std::vector<State> rw_, rv_, ry_, rz_;
  std::vector<State> gy_rot_;
  std::vector<State> fx_, fy_;
  std::vector<std::array<State, 3>> ex_rot_;
  Endpoints2D<NC> end_;
  std::vector<GrpStats> thread_grp_, thread_corner_;
  std::vector<ReconStats> thread_recon_;
};

}  // namespace ader

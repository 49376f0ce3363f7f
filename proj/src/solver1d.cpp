#include <algorithm>
#include <cmath>
#include <sstream>

#include "ader/parallel.hpp"
#include "ader/solver.hpp"

namespace ader {

namespace {

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

}  // namespace

// Clamp of v into the interval spanned by the two one-sided slopes,
// median(v, s1, s2) = v + minmod(s1 - v, s2 - v). Smooth monotone data is
// untouched; the result never exceeds the larger one-sided slope.
double limit_slope(double v, double s1, double s2) { return v + minmod(s1 - v, s2 - v); }

double limit_slope(double v, double s1, double s2, bool troubled) {
  return troubled ? minmod(v, minmod(s1, s2)) : limit_slope(v, s1, s2);
}

bool troubled_stencil(double wm, double w0, double wp, double vm, double vp, double dx, const WeightConfig& cfg) {
  WeightConfig nl = cfg;
  nl.mode = WeightMode::nonlinear;
  const Quartic big = hermite_quartic(wm, w0, wp, dx * vm, dx * vp);
  const double sl = w0 - wm, sr = wp - w0;
  const std::array<double, 3> beta{smoothness_beta(big), sl * sl, sr * sr};
  return nonlinear_weights(beta, nl)[0] < 0.5 * nl.gamma[0];
}

template <class Model>
double compute_dt(const Model& model, const Field1D<Model::kComps>& f, double cfl, double t_end, double max_dt) {
  double lam = 0.0;
  for (int i = 0; i < f.size(); ++i) lam = std::max(lam, model.max_wavespeed(f.w(i)));
  double dt = lam > 0.0 ? cfl * f.grid.dx() / lam : max_dt;
  dt = std::min(dt, max_dt);
  return std::min(dt, t_end - f.time);
}

template <int NC>
void update_derivative_fields(Field1D<NC>& f, std::span<const Vec<NC>> endpoint) {
  const double inv = 1.0 / f.grid.dx();
  for (int i = 0; i < f.size(); ++i) f.v(i) = (endpoint[i + 1] - endpoint[i]) * inv;
}

template <class Model>
Solver1D<Model>::Solver1D(const Model& model, const BoundarySpec1D<NC>& bc, const SolverOptions& opt)
    : model_(model), bc_(bc), opt_(opt) {
  bc_.validate();
  if (!(opt_.cfl > 0.0 && opt_.cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
  thread_grp_.resize(max_threads());
  thread_recon_.resize(max_threads());
}

template <class Model>
void Solver1D<Model>::apply_boundary(Field& f) const {
  ader::apply_boundary(model_, f, bc_);
}

template <class Model>
double Solver1D<Model>::compute_dt(const Field& f, double t_end) const {
  return ader::compute_dt(model_, f, opt_.cfl, t_end, opt_.max_dt);
}

template <class Model>
void Solver1D<Model>::advance_step(Field& f, double dt) {
  const int n = f.size();
  const double dx = f.grid.dx();
  const QuadratureRule& rule = opt_.time_rule;
  const bool reuse = rule.ends_at_one();
  flux_.resize(n + 1);
  endpoint_.resize(n + 1);
  for (auto& s : thread_grp_) s = {};
  for (auto& s : thread_recon_) s = {};

  parallel_for(n + 1, [&](int face, int thread) {
    try {
      const State* wp = &f.w(face - 2);
      const State* vp = &f.v(face - 2);
      FaceTrace1D<NC> left, right;
      trace_face_1d(model_, std::span<const State, 4>(wp, 4), std::span<const State, 4>(vp, 4), dx, opt_.recon,
                    left, right, &thread_recon_[thread]);
      const TimeTaylor<NC> taylor = grp_time_taylor(model_, left, right, &thread_grp_[thread]);
      const FluxAverage<NC> avg = time_average_flux(model_, taylor, dt, rule);
      flux_[face] = avg.flux;
      endpoint_[face] = reuse ? avg.states[avg.count - 1] : evaluate_taylor(taylor, dt);
    } catch (const PhysicsError& e) {
      throw PhysicsError(std::string(e.what()) + " at face", face, f.time);
    }
  });

  for (const auto& s : thread_grp_) {
    counters_.flux_points.solves += s.solves;
    counters_.flux_points.eigensystems += s.eigensystems;
  }
  for (const auto& s : thread_recon_) {
    counters_.recon.weight_evaluations += s.weight_evaluations;
    counters_.recon.reconstructions += s.reconstructions;
  }
  if (!reuse) counters_.endpoint_evaluations += n + 1;

  const double r = dt / dx;
  for (int i = 0; i < n; ++i) {
    f.w(i) -= r * (flux_[i + 1] - flux_[i]);
    if (!model_.is_physical(f.w(i))) {
      std::ostringstream os;
      os << model_.name() << ": non-physical cell average after update";
      throw PhysicsError(os.str(), i, f.time + dt);
    }
  }
  update_derivative_fields<NC>(f, endpoint_);
  f.time += dt;
  ++counters_.steps;

  if (opt_.limiter != LimiterMode::off) {
    apply_boundary(f);
    limit_derivative_averages(f);
  }
}

template <class Model>
void Solver1D<Model>::limit_derivative_averages(Field& f) {
  if (opt_.limiter == LimiterMode::off) return;
  const int n = f.size();
  const double inv = 1.0 / f.grid.dx();
  const bool project = opt_.recon.characteristic && NC > 1;
  std::vector<State> out(n);
  long changed = 0;
  for (int i = 0; i < n; ++i) {
    State v = f.v(i);
    State fwd = (f.w(i + 1) - f.w(i)) * inv;
    State bwd = (f.w(i) - f.w(i - 1)) * inv;
    State wm = f.w(i - 1), w0 = f.w(i), wp = f.w(i + 1), vm = f.v(i - 1), vp = f.v(i + 1);
    Eigensystem<NC> es;
    if (project) {
      es = model_.eigensystem(f.w(i));
      for (State* x : {&v, &fwd, &bwd, &wm, &w0, &wp, &vm, &vp}) *x = es.left * *x;
    }
    State lim;
    for (int c = 0; c < NC; ++c) {
      const bool t = troubled_stencil(wm[c], w0[c], wp[c], vm[c], vp[c], f.grid.dx(), opt_.recon.weights);
      lim[c] = limit_slope(v[c], fwd[c], bwd[c], t);
    }
    if (lim != v) {
      ++changed;
      out[i] = project ? State(es.right * lim) : lim;
    } else {
      out[i] = f.v(i);
    }
  }
  for (int i = 0; i < n; ++i) f.v(i) = out[i];
  counters_.limited_cells += changed;
}

template <class Model>
long Solver1D<Model>::run(Field& f, double t_end, long max_steps) {
  long steps = 0;
  while (f.time < t_end && steps < max_steps) {
    apply_boundary(f);
    const double dt = compute_dt(f, t_end);
    const bool last = f.time + dt >= t_end;
    advance_step(f, dt);
    if (last) f.time = t_end;
    ++steps;
  }
  return steps;
}

#define ADER_INSTANTIATE_1D(M)                                                                              \
  template double compute_dt<M>(const M&, const Field1D<M::kComps>&, double, double, double);               \
  template class Solver1D<M>;

ADER_INSTANTIATE_1D(Burgers)
ADER_INSTANTIATE_1D(LinearAdvection)
ADER_INSTANTIATE_1D(Euler1D)

template void update_derivative_fields<1>(Field1D<1>&, std::span<const Vec<1>>);
template void update_derivative_fields<3>(Field1D<3>&, std::span<const Vec<3>>);

}  // namespace ader

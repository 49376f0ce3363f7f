#include <algorithm>
#include <cmath>
#include <sstream>

#include "ader/parallel.hpp"
#include "ader/solver.hpp"

namespace ader {

template <class Model>
double compute_dt(const Model& model, const Field2D<Model::kComps>& f, double cfl, double t_end, double max_dt) {
  double lx = 0.0, ly = 0.0;
  for (int j = 0; j < f.grid.ny; ++j)
    for (int i = 0; i < f.grid.nx; ++i) {
      lx = std::max(lx, model.max_wavespeed(f.w(i, j), Axis::x));
      ly = std::max(ly, model.max_wavespeed(f.w(i, j), Axis::y));
    }
  const double rate = lx / f.grid.dx() + ly / f.grid.dy();
  double dt = rate > 0.0 ? cfl / rate : max_dt;
  dt = std::min(dt, max_dt);
  return std::min(dt, t_end - f.time);
}

template <int NC>
void update_derivative_fields(Field2D<NC>& f, const Endpoints2D<NC>& e) {
  const int nx = f.grid.nx, ny = f.grid.ny;
  const double dx = f.grid.dx(), dy = f.grid.dy();
  const auto& gw = FaceGauss::weights;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const auto& xl = e.xface[j * (nx + 1) + i];
      const auto& xr = e.xface[j * (nx + 1) + i + 1];
      const auto& yb = e.yface[j * nx + i];
      const auto& yt = e.yface[(j + 1) * nx + i];
      Vec<NC> vx = Vec<NC>::Zero(), vy = Vec<NC>::Zero();
      for (int q = 0; q < 3; ++q) {
        vx += gw[q] * (xr[q] - xl[q]);
        vy += gw[q] * (yt[q] - yb[q]);
      }
      f.v(i, j) = vx / dx;
      f.y(i, j) = vy / dy;
      const auto& c00 = e.corner[j * (nx + 1) + i];
      const auto& c10 = e.corner[j * (nx + 1) + i + 1];
      const auto& c01 = e.corner[(j + 1) * (nx + 1) + i];
      const auto& c11 = e.corner[(j + 1) * (nx + 1) + i + 1];
      f.z(i, j) = (c11 - c01 - c10 + c00) / (dx * dy);
    }
  }
}

template <class Model>
Solver2D<Model>::Solver2D(const Model& model, const BoundarySpec2D<NC>& bc, const SolverOptions& opt)
    : model_(model), bc_(bc), opt_(opt) {
  bc_.validate();
  if (!(opt_.cfl > 0.0 && opt_.cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
  thread_grp_.resize(max_threads());
  thread_corner_.resize(max_threads());
  thread_recon_.resize(max_threads());
}

template <class Model>
void Solver2D<Model>::apply_boundary(Field& f) const {
  ader::apply_boundary(model_, f, bc_);
}

template <class Model>
double Solver2D<Model>::compute_dt(const Field& f, double t_end) const {
  return ader::compute_dt(model_, f, opt_.cfl, t_end, opt_.max_dt);
}

template <class Model>
void Solver2D<Model>::sweep(const Plane& p, double time, double dt, bool corners, std::vector<State>& flux,
                            std::vector<std::array<State, 3>>& endpoint, std::vector<State>* corner) {
  const int na = p.na, nb = p.nb;
  const QuadratureRule& rule = opt_.time_rule;
  const bool reuse = rule.ends_at_one();
  const auto& gw = FaceGauss::weights;
  flux.resize(static_cast<std::size_t>(na + 1) * nb);
  endpoint.resize(flux.size());

  auto gather = [&p](auto& blk, int fa, int b0, int rows) {
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < rows; ++r) {
        const std::size_t k = p.idx(fa - 2 + c, b0 + r);
        blk.w[c][r] = p.w[k];
        blk.v[c][r] = p.v[k];
        blk.y[c][r] = p.y[k];
        blk.z[c][r] = p.z[k];
      }
  };

  parallel_for(nb, [&](int b, int thread) {
    FaceBlock<NC, 3> blk;
    std::array<FaceTrace2D<NC>, 3> left, right;
    for (int fa = 0; fa <= na; ++fa) {
      try {
        gather(blk, fa, b - 1, 3);
        trace_row_2d(model_, blk, p.da, p.db, std::span<const double, 3>(FaceGauss::nodes), opt_.recon, left, right,
                     &thread_recon_[thread]);
        State sum = State::Zero();
        auto& ends = endpoint[static_cast<std::size_t>(b) * (na + 1) + fa];
        for (int q = 0; q < 3; ++q) {
          const TimeTaylor<NC> taylor = grp_time_taylor(model_, left[q], right[q], &thread_grp_[thread]);
          const FluxAverage<NC> avg = time_average_flux(model_, taylor, dt, rule);
          sum += gw[q] * avg.flux;
          ends[q] = reuse ? avg.states[avg.count - 1] : evaluate_taylor(taylor, dt);
        }
        flux[static_cast<std::size_t>(b) * (na + 1) + fa] = sum;
      } catch (const PhysicsError& e) {
        throw PhysicsError(std::string(e.what()) + " at face row", static_cast<long>(p.idx(fa, b)), time);
      }
    }
  });

  if (!corners) return;
  corner->resize(static_cast<std::size_t>(na + 1) * (nb + 1));
  parallel_for(nb + 1, [&](int fb, int thread) {
    FaceBlock<NC, 4> blk;
    FaceTrace2D<NC> left, right;
    for (int fa = 0; fa <= na; ++fa) {
      try {
        gather(blk, fa, fb - 2, 4);
        trace_corner_2d(model_, blk, p.da, p.db, opt_.recon, left, right, &thread_recon_[thread]);
        const TimeTaylor<NC> taylor = grp_time_taylor(model_, left, right, &thread_corner_[thread]);
        const State end = evaluate_taylor(taylor, dt);
        if (!model_.is_physical(end)) throw PhysicsError(std::string(model_.name()) + ": non-physical corner state");
        (*corner)[static_cast<std::size_t>(fb) * (na + 1) + fa] = end;
      } catch (const PhysicsError& e) {
        throw PhysicsError(std::string(e.what()) + " at corner", static_cast<long>(p.idx(fa, fb)), time);
      }
    }
  });
}

template <class Model>
void Solver2D<Model>::advance_step(Field& f, double dt) {
  const int nx = f.grid.nx, ny = f.grid.ny;
  const double dx = f.grid.dx(), dy = f.grid.dy();
  for (auto& s : thread_grp_) s = {};
  for (auto& s : thread_corner_) s = {};
  for (auto& s : thread_recon_) s = {};

  {
    // x sweep straight on the field storage
    Plane px;
    px.na = nx;
    px.nb = ny;
    px.da = dx;
    px.db = dy;
    px.w = f.wbar.data();
    px.v = f.vbar.data();
    px.y = f.ybar.data();
    px.z = f.zbar.data();
    sweep(px, f.time, dt, true, fx_, end_.xface, &end_.corner);

    // y sweep on a transposed copy with the momentum components swapped
    const std::size_t total = f.wbar.size();
    rw_.resize(total);
    rv_.resize(total);
    ry_.resize(total);
    rz_.resize(total);
    Plane py;
    py.na = ny;
    py.nb = nx;
    py.da = dy;
    py.db = dx;
    for (int i = -kGhost; i < nx + kGhost; ++i)
      for (int j = -kGhost; j < ny + kGhost; ++j) {
        const std::size_t src = f.index(i, j);
        const std::size_t dst = py.idx(j, i);
        rw_[dst] = Model::rotate(f.wbar[src]);
        rv_[dst] = Model::rotate(f.ybar[src]);
        ry_[dst] = Model::rotate(f.vbar[src]);
        rz_[dst] = Model::rotate(f.zbar[src]);
      }
    py.w = rw_.data();
    py.v = rv_.data();
    py.y = ry_.data();
    py.z = rz_.data();
    sweep(py, f.time, dt, false, gy_rot_, ex_rot_, nullptr);
  }

  fy_.resize(static_cast<std::size_t>(nx) * (ny + 1));
  end_.yface.resize(fy_.size());
  for (int i = 0; i < nx; ++i)
    for (int fj = 0; fj <= ny; ++fj) {
      const std::size_t src = static_cast<std::size_t>(i) * (ny + 1) + fj;
      const std::size_t dst = static_cast<std::size_t>(fj) * nx + i;
      fy_[dst] = Model::rotate(gy_rot_[src]);
      for (int q = 0; q < 3; ++q) end_.yface[dst][q] = Model::rotate(ex_rot_[src][q]);
    }

  for (const auto& s : thread_grp_) {
    counters_.flux_points.solves += s.solves;
    counters_.flux_points.eigensystems += s.eigensystems;
  }
  for (const auto& s : thread_corner_) {
    counters_.corner_points.solves += s.solves;
    counters_.corner_points.eigensystems += s.eigensystems;
  }
  for (const auto& s : thread_recon_) {
    counters_.recon.weight_evaluations += s.weight_evaluations;
    counters_.recon.reconstructions += s.reconstructions;
  }
  if (!opt_.time_rule.ends_at_one())
    counters_.endpoint_evaluations += 3L * ((nx + 1) * ny + nx * (ny + 1));

  const double rx = dt / dx, ry = dt / dy;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      State& w = f.w(i, j);
      w -= rx * (fx_[j * (nx + 1) + i + 1] - fx_[j * (nx + 1) + i]) + ry * (fy_[(j + 1) * nx + i] - fy_[j * nx + i]);
      if (!model_.is_physical(w)) {
        std::ostringstream os;
        os << model_.name() << ": non-physical cell average after update at (" << i << ", " << j << ")";
        throw PhysicsError(os.str(), static_cast<long>(j) * nx + i, f.time + dt);
      }
    }
  update_derivative_fields<NC>(f, end_);
  f.time += dt;
  ++counters_.steps;

  if (opt_.limiter != LimiterMode::off) {
    apply_boundary(f);
    limit_derivative_averages(f);
  }
}

template <class Model>
void Solver2D<Model>::limit_derivative_averages(Field& f) {
  if (opt_.limiter == LimiterMode::off) return;
  const int nx = f.grid.nx, ny = f.grid.ny;
  const bool project = opt_.recon.characteristic && NC > 1;
  std::vector<State> nv(static_cast<std::size_t>(nx) * ny), ny_(nv.size());
  long changed = 0;
  // v0 is the derivative average along the stencil axis, dm and dp the same
  // average in the two neighbours
  auto limit = [&](const State& v0, const State (&w)[3], const State& dm, const State& dp, double h,
                   const Eigensystem<NC>* es, bool& hit) {
    State v = v0, fwd = (w[2] - w[1]) / h, bwd = (w[1] - w[0]) / h;
    State cw[3] = {w[0], w[1], w[2]};
    State vm = dm, vp = dp;
    if (es)
      for (State* x : {&v, &fwd, &bwd, &cw[0], &cw[1], &cw[2], &vm, &vp}) *x = es->left * *x;
    State lim;
    for (int c = 0; c < NC; ++c) {
      const bool t = troubled_stencil(cw[0][c], cw[1][c], cw[2][c], vm[c], vp[c], h, opt_.recon.weights);
      lim[c] = limit_slope(v[c], fwd[c], bwd[c], t);
    }
    if (lim == v) return v0;
    hit = true;
    return es ? State(es->right * lim) : lim;
  };
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      bool hit = false;
      Eigensystem<NC> ex, ey;
      if (project) {
        ex = model_.eigensystem(f.w(i, j), Axis::x);
        ey = model_.eigensystem(f.w(i, j), Axis::y);
      }
      const std::size_t k = static_cast<std::size_t>(j) * nx + i;
      const State wx[3] = {f.w(i - 1, j), f.w(i, j), f.w(i + 1, j)};
      const State wy[3] = {f.w(i, j - 1), f.w(i, j), f.w(i, j + 1)};
      nv[k] = limit(f.v(i, j), wx, f.v(i - 1, j), f.v(i + 1, j), f.grid.dx(), project ? &ex : nullptr, hit);
      ny_[k] = limit(f.y(i, j), wy, f.y(i, j - 1), f.y(i, j + 1), f.grid.dy(), project ? &ey : nullptr, hit);
      if (hit) ++changed;
    }
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * nx + i;
      f.v(i, j) = nv[k];
      f.y(i, j) = ny_[k];
    }
  counters_.limited_cells += changed;
}

template <class Model>
long Solver2D<Model>::run(Field& f, double t_end, long max_steps) {
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

template double compute_dt<Euler2D>(const Euler2D&, const Field2D<4>&, double, double, double);
template void update_derivative_fields<4>(Field2D<4>&, const Endpoints2D<4>&);
template class Solver2D<Euler2D>;

}  // namespace ader

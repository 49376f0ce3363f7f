#include "ader/run.hpp"

#include <chrono>
#include <filesystem>
#include <limits>

#include "ader/error.hpp"

namespace ader {

namespace {

SolverOptions solver_options(const RunConfig& cfg, const CaseInfo& info) {
  SolverOptions opt;
  opt.cfl = cfg.cfl;
  if (cfg.max_dt > 0.0) opt.max_dt = cfg.max_dt;
  opt.recon.weights.mode = cfg.weights;
  switch (cfg.characteristic) {
    case Tristate::automatic: opt.recon.characteristic = info.characteristic; break;
    case Tristate::on: opt.recon.characteristic = true; break;
    case Tristate::off: opt.recon.characteristic = false; break;
  }
  opt.limiter = cfg.limiter;
  return opt;
}

template <int NC>
std::vector<double> density(const Field1D<NC>& f) {
  std::vector<double> out(f.size());
  for (int i = 0; i < f.size(); ++i) out[i] = f.w(i)[0];
  return out;
}

template <int NC>
std::vector<double> density(const Field2D<NC>& f) {
  std::vector<double> out(static_cast<std::size_t>(f.grid.nx) * f.grid.ny);
  for (int j = 0; j < f.grid.ny; ++j)
    for (int i = 0; i < f.grid.nx; ++i) out[static_cast<std::size_t>(j) * f.grid.nx + i] = f.w(i, j)[0];
  return out;
}

template <int NC>
std::vector<double> first_component(const std::vector<Vec<NC>>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i][0];
  return out;
}

// Compares against a stored reference when the case has no exact solution.
void reference_norms(RunReport& r, const std::vector<double>& rho) {
  std::string path = r.config.reference;
  if (path.empty()) {
    path = reference_path(r.info.name, 10000);
    if (!std::filesystem::exists(path)) return;
  }
  const ReferenceData ref = read_reference(path);
  if (ref.case_name != r.info.name) throw ConfigError("reference " + path + " belongs to case " + ref.case_name);
  if (ref.n % r.nx != 0) return;
  const auto sub = subsample_reference(ref, r.nx);
  std::vector<double> exact(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) exact[i] = sub[i][0];
  r.norms = error_norms(rho, exact);
  r.has_norms = true;
  r.norms_source = path;
}

template <class Model>
void run_1d(RunReport& r, const Model& model, const Case1D<Model::kComps>& c, const SolverOptions& opt) {
  const Grid1D g{r.nx, r.info.x0, r.info.x1};
  Field1D<Model::kComps> f = initialize_case(c, g);
  Solver1D<Model> solver(model, c.boundary, opt);
  const auto t0 = std::chrono::steady_clock::now();
  r.steps = solver.run(f, r.t_end);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.counters = solver.counters();
  const std::vector<double> rho = density(f);
  if (c.exact) {
    r.norms = error_norms(rho, first_component(exact_averages(c, g, r.t_end)));
    r.has_norms = true;
    r.norms_source = "exact";
  } else {
    reference_norms(r, rho);
  }
  r.min_density = std::numeric_limits<double>::infinity();
  r.min_pressure = std::numeric_limits<double>::infinity();
  for (int i = 0; i < g.n; ++i) {
    r.min_density = std::min(r.min_density, f.w(i)[0]);
    if constexpr (Model::kSystem) r.min_pressure = std::min(r.min_pressure, Model::pressure(f.w(i)));
  }
  if constexpr (!Model::kSystem) r.min_pressure = 0.0;
  r.field = std::move(f);
}

void run_2d(RunReport& r, const Case2D<4>& c, const SolverOptions& opt) {
  const Grid2D g{r.nx, r.ny, r.info.x0, r.info.x1, r.info.y0, r.info.y1};
  Field2D<4> f = initialize_case(c, g);
  Solver2D<Euler2D> solver(Euler2D{}, c.boundary, opt);
  const auto t0 = std::chrono::steady_clock::now();
  r.steps = solver.run(f, r.t_end);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.counters = solver.counters();
  if (c.exact) {
    r.norms = error_norms(density(f), first_component(exact_averages(c, g, r.t_end)));
    r.has_norms = true;
    r.norms_source = "exact";
  }
  r.min_density = std::numeric_limits<double>::infinity();
  r.min_pressure = std::numeric_limits<double>::infinity();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      r.min_density = std::min(r.min_density, f.w(i, j)[0]);
      r.min_pressure = std::min(r.min_pressure, Euler2D::pressure(f.w(i, j)));
    }
  r.field = std::move(f);
}

}  // namespace

std::pair<int, int> resolved_mesh(const RunConfig& cfg, const CaseInfo& info) {
  const int nx = cfg.n > 0 ? cfg.n : info.n;
  if (info.dim == 1) return {nx, 0};
  int ny = cfg.ny;
  if (ny <= 0) {
    // keep the default aspect ratio when only n is given
    ny = cfg.n > 0 ? static_cast<int>(static_cast<long>(cfg.n) * info.ny / info.n) : info.ny;
  }
  if (ny <= 0) throw ConfigError("mesh too coarse for case " + info.name);
  return {nx, ny};
}

RunReport execute_run(const RunConfig& cfg) {
  RunReport r;
  r.config = cfg;
  r.info = case_info(cfg.case_name);
  std::tie(r.nx, r.ny) = resolved_mesh(cfg, r.info);
  r.t_end = cfg.t_end > 0.0 ? cfg.t_end : r.info.t_end;
  const SolverOptions opt = solver_options(cfg, r.info);
  r.characteristic = opt.recon.characteristic;
  switch (r.info.model) {
    case ModelKind::burgers: run_1d(r, Burgers{}, scalar_case(r.info.name), opt); break;
    case ModelKind::advection:
      run_1d(r, LinearAdvection{advection_speed(r.info.name)}, scalar_case(r.info.name), opt);
      break;
    case ModelKind::euler1d: run_1d(r, Euler1D{}, euler1d_case(r.info.name), opt); break;
    case ModelKind::euler2d: run_2d(r, euler2d_case(r.info.name), opt); break;
  }
  return r;
}

ConvergenceReport execute_convergence(const RunConfig& cfg) {
  if (cfg.refine.size() < 2) throw ConfigError("convergence mode needs at least two refine levels");
  for (std::size_t k = 1; k < cfg.refine.size(); ++k)
    if (cfg.refine[k] != 2 * cfg.refine[k - 1]) throw ConfigError("refine levels must double successively");
  const CaseInfo& info = case_info(cfg.case_name);
  ConvergenceReport rep;
  for (int n : cfg.refine) {
    RunConfig c = cfg;
    c.n = n;
    c.ny = info.dim == 2 ? static_cast<int>(static_cast<long>(n) * info.ny / info.n) : 0;
    RunReport r = execute_run(c);
    if (!r.has_norms) throw ConfigError("case " + info.name + " has no exact or reference solution to converge to");
    rep.levels.push_back({n, r.norms});
    rep.runs.push_back(std::move(r));
  }
  const std::string what = info.model == ModelKind::burgers || info.model == ModelKind::advection
                               ? "errors"
                               : "errors in density";
  rep.table = format_convergence_table(info.name + ": " + what + " at T=" + std::to_string(rep.runs[0].t_end),
                                       rep.levels, info.dim == 2);
  return rep;
}

std::string version_string() { return ADER_VERSION; }

}  // namespace ader

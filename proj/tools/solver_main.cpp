// Batch runner: solver run <config> | convergence <config> | list-cases

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "ader/config.hpp"
#include "ader/error.hpp"
#include "ader/parallel.hpp"
#include "ader/run.hpp"

namespace {

enum Exit { kOk = 0, kConfig = 2, kSolver = 3, kIo = 4 };

void apply_thread_env() {
  if (const char* env = std::getenv("ADER_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) ader::set_threads(n);
  }
}

int cmd_run(const std::string& path) {
  const ader::RunConfig cfg = ader::load_config(path);
  const ader::RunReport rep = ader::execute_run(cfg);
  const auto files = ader::emit_outputs(rep);
  std::cout << rep.info.name << ": " << rep.steps << " steps to t=" << rep.t_end << " in " << std::fixed
            << std::setprecision(2) << rep.wall_seconds << " s\n";
  std::cout << std::defaultfloat << std::setprecision(6);
  if (rep.has_norms)
    std::cout << "  L1=" << rep.norms.l1 << " L2=" << rep.norms.l2 << " Linf=" << rep.norms.linf << " ("
              << rep.norms_source << ")\n";
  if (rep.info.model == ader::ModelKind::euler1d || rep.info.model == ader::ModelKind::euler2d)
    std::cout << "  min rho=" << rep.min_density << " min P=" << rep.min_pressure << "\n";
  if (cfg.limiter != ader::LimiterMode::off)
    std::cout << "  derivative limiter ON, " << rep.counters.limited_cells << " cell updates limited\n";
  for (const auto& f : files) std::cout << "  wrote " << f << "\n";
  return kOk;
}

int cmd_convergence(const std::string& path) {
  const ader::RunConfig cfg = ader::load_config(path);
  const ader::ConvergenceReport rep = ader::execute_convergence(cfg);
  const std::string file = ader::emit_convergence(cfg, rep);
  std::cout << rep.table << "wrote " << file << "\n";
  return kOk;
}

int cmd_list() {
  for (const auto& c : ader::case_catalog()) {
    std::cout << std::left << std::setw(18) << c.name << std::setw(10) << ader::to_string(c.model);
    std::string mesh = std::to_string(c.n);
    if (c.dim == 2) mesh += "x" + std::to_string(c.ny);
    std::cout << std::setw(10) << mesh << "T=" << std::setw(10) << c.t_end << c.summary << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-order finite volume solver for 1D/2D Burgers and Euler test problems"};
  app.footer(std::string("\nEnvironment: ADER_THREADS sets the number of OpenMP threads.\n"
                         "Exit codes: 0 ok, 2 configuration error, 3 solver abort, 4 I/O error.\n\n") +
             ader::config_help());
  app.require_subcommand(1);
  std::string config_path;
  auto* run = app.add_subcommand("run", "run one case described by a config file");
  run->add_option("config", config_path, "config file")->required();
  auto* conv = app.add_subcommand("convergence", "run the refine sequence of a config and tabulate errors");
  conv->add_option("config", config_path, "config file")->required();
  auto* list = app.add_subcommand("list-cases", "list the built-in cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  apply_thread_env();
  try {
    if (run->parsed()) return cmd_run(config_path);
    if (conv->parsed()) return cmd_convergence(config_path);
    if (list->parsed()) return cmd_list();
  } catch (const ader::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const ader::PhysicsError& e) {
    std::cerr << "solver aborted: " << e.what() << "\n";
    return kSolver;
  } catch (const ader::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  }
  return kOk;
}

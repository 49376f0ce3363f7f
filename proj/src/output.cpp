#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ader/error.hpp"
#include "ader/run.hpp"

namespace ader {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  out << std::setprecision(17);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::string mesh_tag(const RunReport& r) {
  std::string s = "N" + std::to_string(r.nx);
  if (r.info.dim == 2) s += "x" + std::to_string(r.ny);
  return s;
}

const char* const kConservedNames1[] = {"rho", "rho_u", "E"};
const char* const kPrimitiveNames1[] = {"rho", "u", "P"};
const char* const kConservedNames2[] = {"rho", "rho_mu", "rho_nu", "E"};
const char* const kPrimitiveNames2[] = {"rho", "mu", "nu", "P"};

}  // namespace

template <int NC>
void write_field_1d(const std::string& path, const Field1D<NC>& f, bool with_primitive) {
  auto out = open_out(path);
  out << "# x";
  if constexpr (NC == 1) {
    out << " w";
  } else {
    for (const char* n : kConservedNames1) out << ' ' << n;
    if (with_primitive)
      for (const char* n : kPrimitiveNames1) out << ' ' << n << "_prim";
  }
  out << "  (t=" << f.time << ", N=" << f.size() << ")\n";
  for (int i = 0; i < f.size(); ++i) {
    out << f.grid.center(i);
    for (int c = 0; c < NC; ++c) out << ' ' << f.w(i)[c];
    if constexpr (NC == 3) {
      if (with_primitive) {
        const Vec<3> q = Euler1D{}.to_primitive(f.w(i));
        for (int c = 0; c < 3; ++c) out << ' ' << q[c];
      }
    }
    out << '\n';
  }
  finish(out, path);
}

template void write_field_1d<1>(const std::string&, const Field1D<1>&, bool);
template void write_field_1d<3>(const std::string&, const Field1D<3>&, bool);

void write_field_2d(const std::string& path, const Field2D<4>& f) {
  auto out = open_out(path);
  out << "# x y";
  for (const char* n : kConservedNames2) out << ' ' << n;
  for (const char* n : kPrimitiveNames2) out << ' ' << n << "_prim";
  out << "  (t=" << f.time << ", " << f.grid.nx << "x" << f.grid.ny << ")\n";
  for (int j = 0; j < f.grid.ny; ++j) {
    if (j > 0) out << '\n';
    for (int i = 0; i < f.grid.nx; ++i) {
      out << f.grid.xc(i) << ' ' << f.grid.yc(j);
      for (int c = 0; c < 4; ++c) out << ' ' << f.w(i, j)[c];
      const Vec<4> q = Euler2D{}.to_primitive(f.w(i, j));
      for (int c = 0; c < 4; ++c) out << ' ' << q[c];
      out << '\n';
    }
  }
  finish(out, path);
}

void write_contour_2d(const std::string& path, const Field2D<4>& f) {
  auto out = open_out(path);
  out << "# x y rho  (t=" << f.time << ", " << f.grid.nx << "x" << f.grid.ny << ")\n";
  for (int j = 0; j < f.grid.ny; ++j) {
    if (j > 0) out << '\n';
    for (int i = 0; i < f.grid.nx; ++i) out << f.grid.xc(i) << ' ' << f.grid.yc(j) << ' ' << f.w(i, j)[0] << '\n';
  }
  finish(out, path);
}

void write_norms(const std::string& path, const RunReport& r) {
  auto out = open_out(path);
  out << "case: " << r.info.name << "\n";
  out << "mesh: " << mesh_tag(r) << "\n";
  out << "t_end: " << r.t_end << "\n";
  out << "has_norms: " << (r.has_norms ? "true" : "false") << "\n";
  if (r.has_norms) {
    out << "source: " << r.norms_source << "\n";
    out << "component: " << (r.info.model == ModelKind::burgers || r.info.model == ModelKind::advection ? "w" : "rho")
        << "\n";
    out << "L1: " << r.norms.l1 << "\n";
    out << "L2: " << r.norms.l2 << "\n";
    out << "Linf: " << r.norms.linf << "\n";
  }
  finish(out, path);
}

void write_metadata(const std::string& path, const RunReport& r) {
  auto out = open_out(path);
  out << "version: " << version_string() << "\n";
  out << "case: " << r.info.name << "\n";
  out << "model: " << to_string(r.info.model) << "\n";
  out << "mesh: " << mesh_tag(r) << "\n";
  out << "t_end: " << r.t_end << "\n";
  out << "steps: " << r.steps << "\n";
  out << "characteristic: " << (r.characteristic ? "on" : "off") << "\n";
  out << "limiter: " << (r.config.limiter == LimiterMode::minmod ? "minmod" : "off") << "\n";
  out << "limiter_enabled: " << (r.config.limiter != LimiterMode::off ? "true" : "false") << "\n";
  out << "limited_cells: " << r.counters.limited_cells << "\n";
  out << "grp_flux_solves: " << r.counters.flux_points.solves << "\n";
  out << "grp_corner_solves: " << r.counters.corner_points.solves << "\n";
  out << "eigensystems: " << r.counters.flux_points.eigensystems + r.counters.corner_points.eigensystems << "\n";
  out << "min_density: " << r.min_density << "\n";
  out << "min_pressure: " << r.min_pressure << "\n";
  out << "# config\n";
  std::istringstream cfg(serialize_config(r.config));
  for (std::string line; std::getline(cfg, line);) out << "config." << line << "\n";
  finish(out, path);
}

std::vector<std::string> emit_outputs(const RunReport& r) {
  const std::filesystem::path dir(r.config.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  const std::string stem = (dir / (r.info.name + "_" + mesh_tag(r))).string();
  std::vector<std::string> written;
  for (const auto& fmt : r.config.formats) {
    if (fmt == "field") {
      const std::string p = stem + "_field.txt";
      if (const auto* f1 = std::get_if<Field1D<1>>(&r.field)) write_field_1d(p, *f1, false);
      else if (const auto* f3 = std::get_if<Field1D<3>>(&r.field)) write_field_1d(p, *f3, true);
      else if (const auto* f4 = std::get_if<Field2D<4>>(&r.field)) write_field_2d(p, *f4);
      written.push_back(p);
    } else if (fmt == "contour") {
      if (const auto* f4 = std::get_if<Field2D<4>>(&r.field)) {
        const std::string p = stem + "_contour.txt";
        write_contour_2d(p, *f4);
        written.push_back(p);
      }
    } else if (fmt == "norms") {
      const std::string p = stem + "_norms.txt";
      write_norms(p, r);
      written.push_back(p);
    } else if (fmt == "metadata") {
      const std::string p = stem + "_metadata.txt";
      write_metadata(p, r);
      written.push_back(p);
    } else if (fmt == "reference") {
      ReferenceData ref;
      ref.case_name = r.info.name;
      ref.n = r.nx;
      ref.t = r.t_end;
      auto fill = [&ref](const auto& f) {
        constexpr int NC = std::decay_t<decltype(f)>::State::RowsAtCompileTime;
        ref.components = NC;
        for (int i = 0; i < f.size(); ++i) {
          ref.x.push_back(f.grid.center(i));
          ref.values.emplace_back(f.w(i).data(), f.w(i).data() + NC);
        }
      };
      if (const auto* f1 = std::get_if<Field1D<1>>(&r.field)) fill(*f1);
      else if (const auto* f3 = std::get_if<Field1D<3>>(&r.field)) fill(*f3);
      else throw ConfigError("reference output is only defined for 1D cases");
      const std::string p = (dir / (r.info.name + "_N" + std::to_string(r.nx) + ".txt")).string();
      write_reference(p, ref);
      written.push_back(p);
    }
  }
  return written;
}

std::string emit_convergence(const RunConfig& cfg, const ConvergenceReport& rep) {
  const std::filesystem::path dir(cfg.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  const std::string p = (dir / (cfg.case_name + "_convergence.txt")).string();
  auto out = open_out(p);
  out << rep.table;
  finish(out, p);
  return p;
}

}  // namespace ader

#include "ader/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

#include "ader/cases.hpp"
#include "ader/error.hpp"

namespace ader {

namespace {

const std::set<std::string> kFormats{"field", "contour", "norms", "metadata", "convergence", "reference"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& v, int line, const std::string& key) {
  int out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) fail(line, "invalid integer for " + key + ": '" + v + "'");
  return out;
}

double parse_double(const std::string& v, int line, const std::string& key) {
  char* end = nullptr;
  errno = 0;
  const double out = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size() || errno == ERANGE || !std::isfinite(out))
    fail(line, "invalid number for " + key + ": '" + v + "'");
  return out;
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(v);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::set<std::string> seen;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected key=value, got '" + s + "'");
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (!seen.insert(key).second) fail(line, "duplicate key '" + key + "'");

    if (key == "case") {
      try {
        case_info(val);
      } catch (const ConfigError& e) {
        fail(line, e.what());
      }
      cfg.case_name = val;
    } else if (key == "n") {
      cfg.n = parse_int(val, line, key);
      if (cfg.n <= 0) fail(line, "n must be positive");
    } else if (key == "ny") {
      cfg.ny = parse_int(val, line, key);
      if (cfg.ny <= 0) fail(line, "ny must be positive");
    } else if (key == "refine") {
      cfg.refine.clear();
      for (const auto& item : split_list(val)) {
        const int n = parse_int(item, line, key);
        if (n <= 0) fail(line, "refine levels must be positive");
        cfg.refine.push_back(n);
      }
    } else if (key == "cfl") {
      cfg.cfl = parse_double(val, line, key);
      if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) fail(line, "cfl must lie in (0, 1], got " + val);
    } else if (key == "t_end") {
      cfg.t_end = parse_double(val, line, key);
      if (!(cfg.t_end > 0.0)) fail(line, "t_end must be positive");
    } else if (key == "max_dt") {
      cfg.max_dt = parse_double(val, line, key);
      if (!(cfg.max_dt > 0.0)) fail(line, "max_dt must be positive");
    } else if (key == "weights") {
      if (val == "nonlinear") cfg.weights = WeightMode::nonlinear;
      else if (val == "linear") cfg.weights = WeightMode::linear;
      else fail(line, "weights must be nonlinear or linear");
    } else if (key == "characteristic") {
      if (val == "auto") cfg.characteristic = Tristate::automatic;
      else if (val == "on" || val == "true") cfg.characteristic = Tristate::on;
      else if (val == "off" || val == "false") cfg.characteristic = Tristate::off;
      else fail(line, "characteristic must be auto, on or off");
    } else if (key == "limiter") {
      if (val == "off") cfg.limiter = LimiterMode::off;
      else if (val == "minmod") cfg.limiter = LimiterMode::minmod;
      else fail(line, "limiter must be off or minmod");
    } else if (key == "output_dir") {
      if (val.empty()) fail(line, "output_dir must not be empty");
      cfg.output_dir = val;
    } else if (key == "formats") {
      cfg.formats = split_list(val);
      for (const auto& f : cfg.formats)
        if (!kFormats.count(f)) fail(line, "unknown output format '" + f + "'");
    } else if (key == "reference") {
      cfg.reference = val;
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  if (cfg.case_name.empty()) throw ConfigError("config: missing required key 'case'");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  os << "case=" << c.case_name << "\n";
  if (c.n > 0) os << "n=" << c.n << "\n";
  if (c.ny > 0) os << "ny=" << c.ny << "\n";
  if (!c.refine.empty()) {
    os << "refine=";
    for (std::size_t i = 0; i < c.refine.size(); ++i) os << (i ? "," : "") << c.refine[i];
    os << "\n";
  }
  os << "cfl=" << fmt_double(c.cfl) << "\n";
  if (c.t_end > 0.0) os << "t_end=" << fmt_double(c.t_end) << "\n";
  if (c.max_dt > 0.0) os << "max_dt=" << fmt_double(c.max_dt) << "\n";
  os << "weights=" << (c.weights == WeightMode::linear ? "linear" : "nonlinear") << "\n";
  os << "characteristic="
     << (c.characteristic == Tristate::automatic ? "auto" : c.characteristic == Tristate::on ? "on" : "off") << "\n";
  os << "limiter=" << (c.limiter == LimiterMode::minmod ? "minmod" : "off") << "\n";
  os << "output_dir=" << c.output_dir << "\n";
  os << "formats=";
  for (std::size_t i = 0; i < c.formats.size(); ++i) os << (i ? "," : "") << c.formats[i];
  os << "\n";
  if (!c.reference.empty()) os << "reference=" << c.reference << "\n";
  return os.str();
}

std::string config_help() {
  return R"(Configuration file: one key=value per line, '#' starts a comment.

  case=<name>            required; see list-cases
  n=<int>                cells along x (default: case default)
  ny=<int>               cells along y for 2D cases (default: case default,
                         or n when n is given for a square case)
  refine=<n1,n2,...>     mesh sequence for the convergence command
  cfl=<float>            CFL number in (0, 1] (default 0.9)
  t_end=<float>          final time (default: case default)
  max_dt=<float>         upper bound on the step (default: none)
  weights=nonlinear|linear          reconstruction weights (default nonlinear)
  characteristic=auto|on|off        characteristic-wise reconstruction for
                                    systems (default auto: on for Euler, off for scalars)
  limiter=off|minmod     derivative-average safeguard (default off)
  output_dir=<path>      output directory (default output)
  formats=<list>         any of field, contour, norms, metadata, convergence,
                         reference (default field,norms,metadata)
  reference=<path>       reference solution file for cases without an exact
                         solution (default: stored reference when present)
)";
}

}  // namespace ader

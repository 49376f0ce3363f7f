#include "ader/cases.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "ader/equations.hpp"
#include "ader/error.hpp"
#include "ader/quadrature.hpp"

namespace ader {

namespace {

constexpr double kPi = std::numbers::pi;

const LineRule& gauss10() {
  static const LineRule rule = gauss_legendre_centered(10);
  return rule;
}

Vec<3> prim1(double rho, double u, double p) { return Euler1D{}.to_conserved(Vec<3>(rho, u, p)); }
Vec<4> prim2(double rho, double u, double v, double p) { return Euler2D{}.to_conserved(Vec<4>(rho, u, v, p)); }

// Piecewise data; at a break the mean of the neighbouring pieces.
template <int NC>
std::function<Vec<NC>(double)> piecewise(std::vector<double> breaks, std::vector<std::function<Vec<NC>(double)>> pieces) {
  return [breaks = std::move(breaks), pieces = std::move(pieces)](double x) -> Vec<NC> {
    for (std::size_t k = 0; k < breaks.size(); ++k) {
      if (x < breaks[k]) return pieces[k](x);
      if (x == breaks[k]) return 0.5 * (pieces[k](x) + pieces[k + 1](x));
    }
    return pieces.back()(x);
  };
}

template <int NC>
std::function<Vec<NC>(double)> constant(const Vec<NC>& w) {
  return [w](double) { return w; };
}

template <int NC>
Side1D<NC> side1(BoundaryKind k) {
  Side1D<NC> s;
  s.kind = k;
  return s;
}

template <int NC>
BoundarySpec1D<NC> both1(BoundaryKind k) {
  return {side1<NC>(k), side1<NC>(k)};
}

template <int NC>
BoundarySpec2D<NC> all2(BoundaryKind k) {
  BoundarySpec2D<NC> b;
  b.left.kind = b.right.kind = b.bottom.kind = b.top.kind = k;
  return b;
}

double wrap(double x, double lo, double len) {
  double r = std::fmod(x - lo, len);
  if (r < 0.0) r += len;
  return lo + r;
}

std::vector<double> cut_points(double a, double b, const std::vector<double>& breaks) {
  std::vector<double> pts{a};
  for (double x : breaks)
    if (x > a && x < b) pts.push_back(x);
  pts.push_back(b);
  return pts;
}

// Quadrant data of the 2D Riemann problems; states ordered
// (upper right, upper left, lower left, lower right).
Case2D<4> quadrant_case(const CaseInfo& info, const std::array<Vec<4>, 4>& q) {
  Case2D<4> c;
  c.info = info;
  c.initial = [q](double x, double y) -> Vec<4> {
    auto pick = [&q](bool right, bool up) { return up ? (right ? q[0] : q[1]) : (right ? q[3] : q[2]); };
    std::array<bool, 2> xs{x > 0.5, x >= 0.5};
    std::array<bool, 2> ys{y > 0.5, y >= 0.5};
    Vec<4> sum = Vec<4>::Zero();
    int count = 0;
    for (bool r : {false, true}) {
      if (r != xs[0] && r != xs[1]) continue;
      for (bool u : {false, true}) {
        if (u != ys[0] && u != ys[1]) continue;
        sum += pick(r, u);
        ++count;
      }
    }
    return sum / count;
  };
  c.xbreaks = {0.5};
  c.ybreaks = {0.5};
  c.boundary = all2<4>(BoundaryKind::transmissive);
  return c;
}

//------------------------------------------------------------------------------
// Double Mach reflection: a Mach 10 shock along y = h(x, t).

const Vec<4>& dmr_post() {
  static const Vec<4> w(8.0, 57.1597, -33.0012, 563.544);
  return w;
}
const Vec<4>& dmr_pre() {
  static const Vec<4> w = prim2(1.4, 0.0, 0.0, 1.0);
  return w;
}

double dmr_h(double x, double t) { return std::sqrt(3.0) * (x - 1.0 / 6.0) - 20.0 * t; }

Vec<4> dmr_point(double x, double y, double t) {
  const double d = y - dmr_h(x, t);
  if (d > 0.0) return dmr_post();
  if (d < 0.0) return dmr_pre();
  return 0.5 * (dmr_post() + dmr_pre());
}

// Fraction of the box lying on the post-shock side y >= h(x, t). The covered
// height is piecewise linear in x with kinks where h crosses ya or yb, so a
// midpoint rule per piece is exact.
double dmr_fraction(double xa, double xb, double ya, double yb, double t) {
  const double s3 = std::sqrt(3.0);
  std::vector<double> kinks{1.0 / 6.0 + (ya + 20.0 * t) / s3, 1.0 / 6.0 + (yb + 20.0 * t) / s3};
  const std::vector<double> pts = cut_points(xa, xb, kinks);
  double area = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const double xm = 0.5 * (pts[k] + pts[k + 1]);
    const double h = std::clamp(dmr_h(xm, t), ya, yb);
    area += (pts[k + 1] - pts[k]) * (yb - h);
  }
  return area / ((xb - xa) * (yb - ya));
}

Vec<4> dmr_average(double xa, double xb, double ya, double yb, double t) {
  const double f = dmr_fraction(xa, xb, ya, yb, t);
  return f * dmr_post() + (1.0 - f) * dmr_pre();
}

Profile2D<4> dmr_profile() {
  Profile2D<4> p;
  p.average = dmr_average;
  p.point = dmr_point;
  return p;
}

Profile2D<4> constant_profile(const Vec<4>& w) {
  Profile2D<4> p;
  p.average = [w](double, double, double, double, double) { return w; };
  p.point = [w](double, double, double) { return w; };
  return p;
}

//------------------------------------------------------------------------------

Vec<4> vortex_state(double x, double y) {
  const double g = kGamma;
  const double dx = x - 5.0, dy = y - 5.0;
  const double r2 = dx * dx + dy * dy;
  const double rho = std::pow(1.0 - 25.0 * (g - 1.0) / (8.0 * g * kPi * kPi) * std::exp(1.0 - r2), 1.0 / (g - 1.0));
  const double e = 5.0 / (2.0 * kPi) * std::exp(0.5 * (1.0 - r2));
  return prim2(rho, 1.0 - e * dy, 1.0 + e * dx, std::pow(rho, g));
}

std::vector<CaseInfo> build_catalog() {
  using M = ModelKind;
  std::vector<CaseInfo> c;
  auto add = [&c](CaseInfo i) { c.push_back(std::move(i)); };
  add({"burgers-smooth", M::burgers, 1, 0.0, 2.0, 0, 0, 80, 0, 0.5 / kPi, true, false,
       "Burgers, W0 = 0.5 + sin(pi x), periodic, stopped before the shock forms"});
  add({"advection-sine", M::advection, 1, 0.0, 2.0, 0, 0, 80, 0, 2.0, true, false,
       "linear advection at unit speed of 0.5 + sin(pi x), periodic"});
  add({"constant-burgers", M::burgers, 1, 0.0, 1.0, 0, 0, 50, 0, 1.0, true, false, "uniform Burgers state 0.7"});
  add({"constant-euler1d", M::euler1d, 1, 0.0, 1.0, 0, 0, 50, 0, 1.0, true, true,
       "uniform Euler state (rho, u, P) = (1.2, 0.3, 0.9)"});
  add({"euler-sine", M::euler1d, 1, 0.0, 2.0, 0, 0, 80, 0, 10.0, true, true,
       "density wave rho = 1 + 0.2 sin(pi x), u = P = 1, periodic"});
  add({"lax", M::euler1d, 1, -5.0, 5.0, 0, 0, 200, 0, 1.3, false, true, "Lax shock tube, inflow/outflow"});
  add({"shu-osher", M::euler1d, 1, -5.0, 5.0, 0, 0, 400, 0, 1.8, false, true,
       "Mach 3 shock meeting a density sine wave"});
  add({"turbulence", M::euler1d, 1, -5.0, 5.0, 0, 0, 1500, 0, 5.0, false, true,
       "shock meeting a high-frequency density wave"});
  add({"blast", M::euler1d, 1, 0.0, 1.0, 0, 0, 800, 0, 0.038, false, true,
       "interacting blast waves between reflective walls"});
  add({"constant-euler2d", M::euler2d, 2, 0.0, 1.0, 0.0, 1.0, 16, 16, 1.0, true, true,
       "uniform 2D Euler state (rho, mu, nu, P) = (1, 0.3, -0.2, 1)"});
  add({"euler2d-sine", M::euler2d, 2, 0.0, 2.0, 0.0, 2.0, 40, 40, 1.0, true, true,
       "density wave 1 + 0.2 sin(pi (x + y)) moving diagonally, periodic"});
  add({"vortex", M::euler2d, 2, 0.0, 10.0, 0.0, 10.0, 80, 80, 10.0, true, true,
       "isentropic vortex advected once around the periodic box"});
  add({"rp-shocks", M::euler2d, 2, 0.0, 1.0, 0.0, 1.0, 200, 200, 0.25, false, true,
       "2D Riemann problem with four shocks"});
  add({"rp-contacts", M::euler2d, 2, 0.0, 1.0, 0.0, 1.0, 200, 200, 0.8, false, true,
       "2D Riemann problem with four contact discontinuities"});
  add({"double-mach", M::euler2d, 2, 0.0, 4.0, 0.0, 1.0, 480, 120, 0.2, false, true,
       "Mach 10 shock reflecting off a wedge"});
  return c;
}

}  // namespace

std::string to_string(ModelKind m) {
  switch (m) {
    case ModelKind::burgers: return "burgers";
    case ModelKind::advection: return "advection";
    case ModelKind::euler1d: return "euler1d";
    case ModelKind::euler2d: return "euler2d";
  }
  return "unknown";
}

const std::vector<CaseInfo>& case_catalog() {
  static const std::vector<CaseInfo> catalog = build_catalog();
  return catalog;
}

const CaseInfo& case_info(const std::string& name) {
  for (const auto& c : case_catalog())
    if (c.name == name) return c;
  throw ConfigError("unknown case '" + name + "' (see list-cases)");
}

double advection_speed(const std::string&) { return 1.0; }

double burgers_exact(double x, double t, std::optional<double> guess) {
  if (t > 0.9 * kBurgersShockTime)
    throw std::invalid_argument("burgers exact solution requested at t=" + std::to_string(t) +
                                ", past the smooth range t <= 0.9/pi");
  auto g = [x, t](double w) { return w - 0.5 - std::sin(kPi * (x - w * t)); };
  double w = guess.value_or(0.5 + std::sin(kPi * x));
  for (int it = 0; it < 100; ++it) {
    const double r = g(w);
    if (std::abs(r) <= 1e-14) return w;
    const double dg = 1.0 + kPi * t * std::cos(kPi * (x - w * t));
    double step = r / dg;
    // damping: never leave the bracket that contains every root
    double next = w - step;
    while ((next < -0.5 || next > 1.5) && std::abs(step) > 1e-300) {
      step *= 0.5;
      next = w - step;
    }
    w = next;
  }
  if (std::abs(g(w)) <= 1e-13) return w;
  double lo = -0.5, hi = 1.5;  // g(lo) <= 0 <= g(hi), g increasing for t < 1/pi
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Case1D<1> scalar_case(const std::string& name) {
  const CaseInfo& info = case_info(name);
  Case1D<1> c;
  c.info = info;
  if (name == "burgers-smooth") {
    c.initial = [](double x) { return Vec<1>(0.5 + std::sin(kPi * x)); };
    c.boundary = both1<1>(BoundaryKind::periodic);
    c.exact = [](double x, double t) { return Vec<1>(burgers_exact(x, t)); };
  } else if (name == "advection-sine") {
    c.initial = [](double x) { return Vec<1>(0.5 + std::sin(kPi * x)); };
    c.boundary = both1<1>(BoundaryKind::periodic);
    c.exact = [](double x, double t) { return Vec<1>(0.5 + std::sin(kPi * (x - t))); };
  } else if (name == "constant-burgers") {
    c.initial = constant<1>(Vec<1>(0.7));
    c.boundary = both1<1>(BoundaryKind::periodic);
    c.exact = [](double, double) { return Vec<1>(0.7); };
  } else {
    throw ConfigError("case '" + name + "' is not a scalar case");
  }
  return c;
}

Case1D<3> euler1d_case(const std::string& name) {
  const CaseInfo& info = case_info(name);
  Case1D<3> c;
  c.info = info;
  if (name == "constant-euler1d") {
    const Vec<3> w = prim1(1.2, 0.3, 0.9);
    c.initial = constant<3>(w);
    c.boundary = both1<3>(BoundaryKind::periodic);
    c.exact = [w](double, double) { return w; };
  } else if (name == "euler-sine") {
    c.initial = [](double x) { return prim1(1.0 + 0.2 * std::sin(kPi * x), 1.0, 1.0); };
    c.boundary = both1<3>(BoundaryKind::periodic);
    c.exact = [](double x, double t) { return prim1(1.0 + 0.2 * std::sin(kPi * (x - t)), 1.0, 1.0); };
  } else if (name == "lax") {
    c.breaks = {0.0};
    c.initial = piecewise<3>(c.breaks, {constant<3>(prim1(0.445, 0.698, 3.528)), constant<3>(prim1(0.5, 0.0, 0.571))});
    c.boundary = both1<3>(BoundaryKind::transmissive);
  } else if (name == "shu-osher") {
    c.breaks = {-4.0};
    c.initial = piecewise<3>(c.breaks, {constant<3>(prim1(3.857143, 2.629369, 10.333333)),
                                        [](double x) { return prim1(1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0); }});
    c.boundary = both1<3>(BoundaryKind::transmissive);
  } else if (name == "turbulence") {
    c.breaks = {-4.5};
    c.initial = piecewise<3>(c.breaks, {constant<3>(prim1(1.515695, 0.523346, 1.805)),
                                        [](double x) { return prim1(1.0 + 0.1 * std::sin(20.0 * kPi * x), 0.0, 1.0); }});
    c.boundary = both1<3>(BoundaryKind::transmissive);
  } else if (name == "blast") {
    c.breaks = {0.1, 0.9};
    c.initial = piecewise<3>(c.breaks, {constant<3>(prim1(1.0, 0.0, 1000.0)), constant<3>(prim1(1.0, 0.0, 0.01)),
                                        constant<3>(prim1(1.0, 0.0, 100.0))});
    c.boundary = both1<3>(BoundaryKind::reflective);
  } else {
    throw ConfigError("case '" + name + "' is not a 1D Euler case");
  }
  return c;
}

Case2D<4> euler2d_case(const std::string& name) {
  const CaseInfo& info = case_info(name);
  Case2D<4> c;
  c.info = info;
  if (name == "constant-euler2d") {
    const Vec<4> w = prim2(1.0, 0.3, -0.2, 1.0);
    c.initial = [w](double, double) { return w; };
    c.boundary = all2<4>(BoundaryKind::periodic);
    c.exact = [w](double, double, double) { return w; };
  } else if (name == "euler2d-sine") {
    c.initial = [](double x, double y) { return prim2(1.0 + 0.2 * std::sin(kPi * (x + y)), 1.0, 1.0, 1.0); };
    c.boundary = all2<4>(BoundaryKind::periodic);
    c.exact = [](double x, double y, double t) {
      return prim2(1.0 + 0.2 * std::sin(kPi * (x + y - 2.0 * t)), 1.0, 1.0, 1.0);
    };
  } else if (name == "vortex") {
    c.initial = vortex_state;
    c.boundary = all2<4>(BoundaryKind::periodic);
    c.exact = [](double x, double y, double t) { return vortex_state(wrap(x - t, 0.0, 10.0), wrap(y - t, 0.0, 10.0)); };
  } else if (name == "rp-shocks") {
    c = quadrant_case(info, {prim2(1.1, 0.0, 0.0, 1.1), prim2(0.5065, 0.8939, 0.0, 0.35),
                             prim2(1.1, 0.8939, 0.8939, 1.1), prim2(0.5065, 0.0, 0.8939, 0.35)});
  } else if (name == "rp-contacts") {
    c = quadrant_case(info, {prim2(1.0, 0.75, -0.5, 1.0), prim2(2.0, 0.5, 0.5, 1.0), prim2(1.0, -0.75, 0.5, 1.0),
                             prim2(3.0, -0.75, -0.5, 1.0)});
  } else if (name == "double-mach") {
    c.initial = [](double x, double y) { return dmr_point(x, y, 0.0); };
    c.initial_average = [](double xa, double xb, double ya, double yb) { return dmr_average(xa, xb, ya, yb, 0.0); };
    c.boundary.left.kind = BoundaryKind::dirichlet;
    c.boundary.left.profile = constant_profile(dmr_post());
    c.boundary.right.kind = BoundaryKind::transmissive;
    c.boundary.bottom.kind = BoundaryKind::dirichlet;
    c.boundary.bottom.profile = constant_profile(dmr_post());
    c.boundary.bottom.split = 1.0 / 6.0;
    c.boundary.bottom.kind_beyond = BoundaryKind::reflective;
    c.boundary.top.kind = BoundaryKind::dirichlet;
    c.boundary.top.profile = dmr_profile();
  } else {
    throw ConfigError("case '" + name + "' is not a 2D Euler case");
  }
  return c;
}

//------------------------------------------------------------------------------

template <int NC>
Vec<NC> line_average(const std::function<Vec<NC>(double)>& f, double a, double b, const std::vector<double>& breaks) {
  const LineRule& r = gauss10();
  const std::vector<double> pts = cut_points(a, b, breaks);
  Vec<NC> sum = Vec<NC>::Zero();
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const double lo = pts[k], hi = pts[k + 1];
    const double mid = 0.5 * (lo + hi), len = hi - lo;
    Vec<NC> part = Vec<NC>::Zero();
    for (std::size_t q = 0; q < r.nodes.size(); ++q) part += r.weights[q] * f(mid + r.nodes[q] * len);
    sum += len * part;
  }
  return sum / (b - a);
}

template <int NC>
Vec<NC> box_average(const std::function<Vec<NC>(double, double)>& f, double xa, double xb, double ya, double yb,
                    const std::vector<double>& xbreaks, const std::vector<double>& ybreaks) {
  const LineRule& r = gauss10();
  const std::vector<double> xs = cut_points(xa, xb, xbreaks);
  const std::vector<double> ys = cut_points(ya, yb, ybreaks);
  Vec<NC> sum = Vec<NC>::Zero();
  for (std::size_t kx = 0; kx + 1 < xs.size(); ++kx)
    for (std::size_t ky = 0; ky + 1 < ys.size(); ++ky) {
      const double lx = xs[kx + 1] - xs[kx], ly = ys[ky + 1] - ys[ky];
      const double mx = 0.5 * (xs[kx] + xs[kx + 1]), my = 0.5 * (ys[ky] + ys[ky + 1]);
      Vec<NC> part = Vec<NC>::Zero();
      for (std::size_t p = 0; p < r.nodes.size(); ++p)
        for (std::size_t q = 0; q < r.nodes.size(); ++q)
          part += r.weights[p] * r.weights[q] * f(mx + r.nodes[p] * lx, my + r.nodes[q] * ly);
      sum += lx * ly * part;
    }
  return sum / ((xb - xa) * (yb - ya));
}

template <int NC>
Field1D<NC> initialize_case(const Case1D<NC>& c, const Grid1D& g) {
  Field1D<NC> f(g);
  const double dx = g.dx();
  for (int i = 0; i < g.n; ++i) {
    const double a = g.face(i), b = g.face(i + 1);
    f.w(i) = line_average<NC>(c.initial, a, b, c.breaks);
    f.v(i) = (c.initial(b) - c.initial(a)) / dx;
  }
  return f;
}

template <int NC>
Field2D<NC> initialize_case(const Case2D<NC>& c, const Grid2D& g) {
  Field2D<NC> f(g);
  Profile2D<NC> prof;
  auto init = c.initial;
  prof.point = [init](double x, double y, double) { return init(x, y); };
  if (c.initial_average) {
    auto avg = c.initial_average;
    prof.average = [avg](double xa, double xb, double ya, double yb, double) { return avg(xa, xb, ya, yb); };
  } else {
    auto xb = c.xbreaks, yb = c.ybreaks;
    std::function<Vec<NC>(double, double)> fn = init;
    prof.average = [fn, xb, yb](double xa, double xb_, double ya, double yb_, double) {
      return box_average<NC>(fn, xa, xb_, ya, yb_, xb, yb);
    };
  }
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) detail::dirichlet_cell<NC>(f, i, j, prof);
  return f;
}

template <int NC>
std::vector<Vec<NC>> exact_averages(const Case1D<NC>& c, const Grid1D& g, double t) {
  if (!c.exact) throw ConfigError("case '" + c.info.name + "' has no exact solution");
  std::vector<Vec<NC>> out(g.n);
  std::function<Vec<NC>(double)> fn = [&c, t](double x) { return c.exact(x, t); };
  for (int i = 0; i < g.n; ++i) out[i] = line_average<NC>(fn, g.face(i), g.face(i + 1), {});
  return out;
}

template <int NC>
std::vector<Vec<NC>> exact_averages(const Case2D<NC>& c, const Grid2D& g, double t) {
  if (!c.exact) throw ConfigError("case '" + c.info.name + "' has no exact solution");
  std::vector<Vec<NC>> out(static_cast<std::size_t>(g.nx) * g.ny);
  std::function<Vec<NC>(double, double)> fn = [&c, t](double x, double y) { return c.exact(x, y, t); };
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out[static_cast<std::size_t>(j) * g.nx + i] = box_average<NC>(fn, g.xf(i), g.xf(i + 1), g.yf(j), g.yf(j + 1), {}, {});
  return out;
}

template Vec<1> line_average<1>(const std::function<Vec<1>(double)>&, double, double, const std::vector<double>&);
template Vec<3> line_average<3>(const std::function<Vec<3>(double)>&, double, double, const std::vector<double>&);
template Vec<1> box_average<1>(const std::function<Vec<1>(double, double)>&, double, double, double, double,
                               const std::vector<double>&, const std::vector<double>&);
template Vec<4> box_average<4>(const std::function<Vec<4>(double, double)>&, double, double, double, double,
                               const std::vector<double>&, const std::vector<double>&);
template Field1D<1> initialize_case<1>(const Case1D<1>&, const Grid1D&);
template Field1D<3> initialize_case<3>(const Case1D<3>&, const Grid1D&);
template Field2D<4> initialize_case<4>(const Case2D<4>&, const Grid2D&);
template std::vector<Vec<1>> exact_averages<1>(const Case1D<1>&, const Grid1D&, double);
template std::vector<Vec<3>> exact_averages<3>(const Case1D<3>&, const Grid1D&, double);
template std::vector<Vec<4>> exact_averages<4>(const Case2D<4>&, const Grid2D&, double);

//------------------------------------------------------------------------------

Norms error_norms(const std::vector<double>& computed, const std::vector<double>& exact) {
  if (computed.size() != exact.size())
    throw std::invalid_argument("error_norms: " + std::to_string(computed.size()) + " computed values vs " +
                                std::to_string(exact.size()) + " exact values");
  Norms n;
  if (computed.empty()) return n;
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const double e = std::abs(computed[i] - exact[i]);
    s1 += e;
    s2 += e * e;
    n.linf = std::max(n.linf, e);
  }
  n.l1 = s1 / computed.size();
  n.l2 = std::sqrt(s2 / computed.size());
  return n;
}

double convergence_order(double coarse, double fine) {
  if (!(coarse > 0.0) || !(fine > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return std::log2(coarse / fine);
}

std::string format_convergence_table(const std::string& title, const std::vector<ConvergenceLevel>& levels,
                                     bool two_dimensional) {
  std::ostringstream os;
  const int w = 11;
  os << title << "\n";
  os << std::left << std::setw(8) << (two_dimensional ? "NxN" : "N") << "|";
  for (const auto& l : levels) {
    std::string label = std::to_string(l.n);
    if (two_dimensional) label += "x" + std::to_string(l.n);
    os << std::right << std::setw(w) << label;
  }
  os << "\n";
  auto row = [&](const char* name, double Norms::*field) {
    os << std::left << std::setw(8) << name << "|";
    for (const auto& l : levels) {
      std::ostringstream cell;
      cell << std::scientific << std::setprecision(3) << l.norms.*field;
      os << std::right << std::setw(w) << cell.str();
    }
    os << "\n" << std::left << std::setw(8) << "Order" << "|";
    for (std::size_t k = 0; k < levels.size(); ++k) {
      std::string cell;
      if (k > 0) {
        const double o = convergence_order(levels[k - 1].norms.*field, levels[k].norms.*field);
        if (std::isnan(o)) {
          cell = "—";
          os << std::string(w - 1, ' ') << cell;
          continue;
        }
        std::ostringstream c;
        c << std::fixed << std::setprecision(3) << o;
        cell = c.str();
      }
      os << std::right << std::setw(w) << cell;
    }
    os << "\n";
  };
  row("L1", &Norms::l1);
  row("L2", &Norms::l2);
  row("Linf", &Norms::linf);
  return os.str();
}

//------------------------------------------------------------------------------

void write_reference(const std::string& path, const ReferenceData& ref) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open reference file for writing: " + path);
  out << "# case=" << ref.case_name << " N=" << ref.n << " T=" << std::setprecision(17) << ref.t
      << " components=" << ref.components << "\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < ref.x.size(); ++i) {
    out << ref.x[i];
    for (double v : ref.values[i]) out << ' ' << v;
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

ReferenceData read_reference(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open reference file: " + path);
  ReferenceData ref;
  std::string line;
  if (!std::getline(in, line) || line.rfind("#", 0) != 0) throw IoError("missing reference header: " + path);
  std::istringstream hs(line.substr(1));
  std::string tok;
  while (hs >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "case") ref.case_name = val;
    else if (key == "N") ref.n = std::stoi(val);
    else if (key == "T") ref.t = std::stod(val);
    else if (key == "components") ref.components = std::stoi(val);
  }
  if (ref.n <= 0 || ref.components <= 0) throw IoError("malformed reference header: " + path);
  ref.x.reserve(ref.n);
  ref.values.reserve(ref.n);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double x;
    ls >> x;
    std::vector<double> v(ref.components);
    for (auto& c : v) ls >> c;
    if (!ls) throw IoError("malformed reference row in " + path);
    ref.x.push_back(x);
    ref.values.push_back(std::move(v));
  }
  if (static_cast<int>(ref.x.size()) != ref.n)
    throw IoError("reference " + path + " has " + std::to_string(ref.x.size()) + " rows, header says " +
                  std::to_string(ref.n));
  return ref;
}

std::vector<std::vector<double>> subsample_reference(const ReferenceData& ref, int n) {
  if (n <= 0 || ref.n % n != 0)
    throw std::invalid_argument("reference with " + std::to_string(ref.n) + " cells cannot be averaged onto " +
                                std::to_string(n));
  const int r = ref.n / n;
  std::vector<std::vector<double>> out(n, std::vector<double>(ref.components, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < r; ++k)
      for (int c = 0; c < ref.components; ++c) out[i][c] += ref.values[i * r + k][c];
    for (auto& v : out[i]) v /= r;
  }
  return out;
}

std::string reference_directory() {
  if (const char* env = std::getenv("ADER_DATA_DIR")) return std::string(env) + "/reference";
  return std::string(ADER_DATA_DIR) + "/reference";
}

std::string reference_path(const std::string& case_name, int n) {
  return reference_directory() + "/" + case_name + "_N" + std::to_string(n) + ".txt";
}

}  // namespace ader

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ader/quadrature.hpp"
#include "ader/reconstruction.hpp"
#include "../oracles/frozen_values.hpp"

using namespace ader;
using testing_support::uniform;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Exact mean of q over [a, b] from its antiderivative.
double mean(const Quartic& q, double a, double b) {
  auto prim = [&](double x) {
    double s = 0.0;
    for (int k = 4; k >= 0; --k) s = s * x + q.c[k] / (k + 1);
    return s * x;
  };
  return (prim(b) - prim(a)) / (b - a);
}

// sinc factor of a centred average of sin / cos with wavenumber pi
double S(double h) { return std::sin(kPi * h / 2) / (kPi * h / 2); }

struct SineData {
  // averages of sin(pi x) and of its derivative on cell [xc - dx/2, xc + dx/2]
  static double w(double xc, double dx) { return std::sin(kPi * xc) * S(dx); }
  static double v(double xc, double dx) { return kPi * std::cos(kPi * xc) * S(dx); }
};

double exact_sine_derivative(int k, double x) { return std::pow(kPi, k) * std::sin(kPi * x + k * kPi / 2); }

}  // namespace

TEST_CASE("hermite quartic matches its five moment conditions") {
  for (int trial = 0; trial < 200; ++trial) {
    HermiteStencil s;
    for (auto& w : s.wbar) w = uniform(-2, 2);
    for (auto& v : s.vbar_outer) v = uniform(-2, 2);
    s.dx = uniform(0.01, 2.0);
    const Quartic q = build_hermite_quartic(s);
    const double dq[2] = {(q(-0.5) - q(-1.5)) / s.dx, (q(1.5) - q(0.5)) / s.dx};
    auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
    CHECK(rel(mean(q, -1.5, -0.5), s.wbar[0]) < 1e-12);
    CHECK(rel(mean(q, -0.5, 0.5), s.wbar[1]) < 1e-12);
    CHECK(rel(mean(q, 0.5, 1.5), s.wbar[2]) < 1e-12);
    CHECK(rel(dq[0], s.vbar_outer[0]) < 1e-12);
    CHECK(rel(dq[1], s.vbar_outer[1]) < 1e-12);
  }
}

TEST_CASE("hermite quartic examples") {
  const Quartic c = build_hermite_quartic({{2.5, 2.5, 2.5}, {0, 0}, 0.3});
  CHECK(c.c[0] == doctest::Approx(2.5).epsilon(1e-15));
  for (int k = 1; k < 5; ++k) CHECK(std::abs(c.c[k]) < 1e-15);

  // W(x) = x on cells of width 0.2 centred at 0.7
  const double dx = 0.2, xj = 0.7;
  const Quartic lin = build_hermite_quartic({{xj - dx, xj, xj + dx}, {1.0, 1.0}, dx});
  CHECK(lin.c[0] == doctest::Approx(xj).epsilon(1e-14));
  CHECK(lin.c[1] == doctest::Approx(dx).epsilon(1e-14));
  for (int k = 2; k < 5; ++k) CHECK(std::abs(lin.c[k]) < 1e-14);

  // W(x) = x^4 on unit cells, averages from the quadrature oracle
  const Quartic x4 = build_hermite_quartic(
      {{oracle::kX4Averages[0], oracle::kX4Averages[1], oracle::kX4Averages[2]},
       {oracle::kX4DerivAverages[0], oracle::kX4DerivAverages[1]},
       1.0});
  for (int k = 0; k < 4; ++k) CHECK(std::abs(x4.c[k]) < 1e-13);
  CHECK(x4.c[4] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("smoothness indicator examples") {
  Quartic q;
  q.c[0] = 3.0;
  CHECK(smoothness_beta(q) == 0.0);
  q.c[1] = 1.0;
  CHECK(smoothness_beta(q) == doctest::Approx(1.0).epsilon(1e-15));
  Quartic sq;
  sq.c[2] = 1.0;
  CHECK(smoothness_beta(sq) == doctest::Approx(13.0 / 3.0).epsilon(1e-15));
  CHECK(smoothness_beta(build_hermite_quartic({{0, 0, 1}, {0, 0}, 1.0})) ==
        doctest::Approx(oracle::kStepBetaQuartic).epsilon(1e-13));
}

TEST_CASE("nonlinear weight examples") {
  const WeightConfig cfg;
  const auto eq = nonlinear_weights({5, 5, 5}, cfg);
  CHECK(eq[0] == 0.994);
  CHECK(eq[1] == 0.003);
  CHECK(eq[2] == 0.003);
  WeightConfig lin = cfg;
  lin.mode = WeightMode::linear;
  const auto wl = nonlinear_weights({1, 1e6, 0}, lin);
  CHECK(wl == cfg.gamma);
  const auto w = nonlinear_weights({1, 100, 100}, cfg);
  for (int i = 0; i < 3; ++i) CHECK(w[i] == doctest::Approx(oracle::kWeights_1_100_100[i]).epsilon(1e-14));
}

TEST_CASE("nonlinear weights are a convex combination") {
  const WeightConfig cfg;
  for (int trial = 0; trial < 2000; ++trial) {
    std::array<double, 3> beta;
    for (auto& b : beta) b = std::pow(10.0, uniform(-16, 4)) * (uniform(0, 1) < 0.1 ? 0.0 : 1.0);
    const auto w = nonlinear_weights(beta, cfg);
    CHECK(std::abs(w[0] + w[1] + w[2] - 1.0) <= 1e-15);
    for (double x : w) CHECK(x > 0.0);
  }
}

TEST_CASE("shweno cell examples") {
  WeightConfig cfg;
  const CellPolynomial c = shweno_cell({{1.5, 1.5, 1.5}, {0, 0}, 0.1}, cfg);
  CHECK(c.poly.c[0] == doctest::Approx(1.5).epsilon(1e-15));
  for (int k = 1; k < 5; ++k) CHECK(std::abs(c.poly.c[k]) < 1e-15);

  // quartic data, linear weights: the combination telescopes to the quartic
  WeightConfig lin;
  lin.mode = WeightMode::linear;
  for (int trial = 0; trial < 50; ++trial) {
    HermiteStencil s{{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)}, {uniform(-1, 1), uniform(-1, 1)}, 0.4};
    const Quartic big = build_hermite_quartic(s);
    const CellPolynomial p = shweno_cell(s, lin);
    for (int k = 0; k < 5; ++k) CHECK(std::abs(p.poly.c[k] - big.c[k]) < 1e-14);
  }

  // step data against the scripted oracle
  const CellPolynomial step = shweno_cell({{0, 0, 1}, {0, 0}, 1.0}, cfg);
  for (int k = 0; k < 5; ++k) CHECK(std::abs(step.poly.c[k] - oracle::kStepPoly[k]) < 1e-15);
  CHECK(std::abs(step.value(-0.5) - oracle::kStepFaceValues[0]) < 1e-15);
  CHECK(std::abs(step.value(0.5) - oracle::kStepFaceValues[1]) < 1e-15);
}

TEST_CASE("reconstruction conserves the cell mean") {
  for (WeightMode mode : {WeightMode::nonlinear, WeightMode::linear}) {
    WeightConfig cfg;
    cfg.mode = mode;
    for (int trial = 0; trial < 500; ++trial) {
      HermiteStencil s{{uniform(-3, 3), uniform(-3, 3), uniform(-3, 3)}, {uniform(-9, 9), uniform(-9, 9)},
                       uniform(0.01, 1)};
      const CellPolynomial p = shweno_cell(s, cfg);
      CHECK(std::abs(p.poly.cell_average() - s.wbar[1]) <= 1e-12 * std::max(1.0, std::abs(s.wbar[1])));
      CHECK(std::abs(mean(p.poly, -0.5, 0.5) - s.wbar[1]) <= 1e-12 * std::max(1.0, std::abs(s.wbar[1])));
    }
  }
}

TEST_CASE("1d traces: constant field, characteristic projection") {
  const Euler1D m;
  const Vec<3> c = m.to_conserved(Vec<3>(1.2, 0.3, 0.9));
  std::array<Vec<3>, 4> w{c, c, c, c};
  std::array<Vec<3>, 4> v{Vec<3>::Zero(), Vec<3>::Zero(), Vec<3>::Zero(), Vec<3>::Zero()};
  ReconOptions off, on;
  on.characteristic = true;
  FaceTrace1D<3> l0, r0, l1, r1;
  trace_face_1d(m, std::span<const Vec<3>, 4>(w), std::span<const Vec<3>, 4>(v), 0.1, off, l0, r0);
  trace_face_1d(m, std::span<const Vec<3>, 4>(w), std::span<const Vec<3>, 4>(v), 0.1, on, l1, r1);
  CHECK((l0.derivs[0] - c).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((r0.derivs[0] - c).cwiseAbs().maxCoeff() < 1e-15);
  for (int k = 1; k < 5; ++k) {
    CHECK(l0.derivs[k].cwiseAbs().maxCoeff() < 1e-12);
    CHECK(r0.derivs[k].cwiseAbs().maxCoeff() < 1e-12);
  }
  for (int k = 0; k < 5; ++k) {
    CHECK((l1.derivs[k] - l0.derivs[k]).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((r1.derivs[k] - r0.derivs[k]).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("1d traces converge to the exact derivatives") {
  ReconOptions opt;
  opt.weights.mode = WeightMode::linear;
  std::array<double, 5> prev{};
  for (int level = 0; level < 3; ++level) {
    const int n = 40 << level;
    const double dx = 2.0 / n;
    const double xf = 0.3;
    std::array<Vec<1>, 4> w, v;
    for (int i = 0; i < 4; ++i) {
      const double xc = xf + (i - 1.5) * dx;
      w[i] = Vec<1>(SineData::w(xc, dx));
      v[i] = Vec<1>(SineData::v(xc, dx));
    }
    FaceTrace1D<1> l, r;
    trace_face_1d(Burgers{}, std::span<const Vec<1>, 4>(w), std::span<const Vec<1>, 4>(v), dx, opt, l, r);
    for (int k = 0; k < 5; ++k) {
      const double err = std::max(std::abs(l.derivs[k][0] - exact_sine_derivative(k, xf)),
                                  std::abs(r.derivs[k][0] - exact_sine_derivative(k, xf)));
      if (level > 0 && k < 4) {
        const double order = std::log2(prev[k] / err);
        CAPTURE(k);
        CAPTURE(order);
        CHECK(order >= 5 - k - 0.35);
      }
      prev[k] = err;
    }
  }
}

TEST_CASE("weights approach the linear weights on smooth data") {
  const WeightConfig cfg;
  double prev = 1.0;
  for (int n : {40, 80, 160, 320}) {
    const double dx = 2.0 / n;
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
      const double xc = (j + 0.5) * dx;
      const double wm = SineData::w(xc - dx, dx), w0 = SineData::w(xc, dx), wp = SineData::w(xc + dx, dx);
      const Quartic big = hermite_quartic(wm, w0, wp, dx * SineData::v(xc - dx, dx), dx * SineData::v(xc + dx, dx));
      const auto om = nonlinear_weights({smoothness_beta(big), (w0 - wm) * (w0 - wm), (wp - w0) * (wp - w0)}, cfg);
      worst = std::max(worst, std::abs(om[0] - cfg.gamma[0]));
    }
    CAPTURE(n);
    CHECK(worst < prev);
    prev = worst;
  }
}

TEST_CASE("1d traces evaluate one set of weights per reconstruction") {
  const Euler1D m;
  std::array<Vec<3>, 4> w, v;
  for (int i = 0; i < 4; ++i) {
    w[i] = m.to_conserved(Vec<3>(1.0 + 0.1 * i * i, 0.2 * i, 1.0 + 0.05 * i));
    v[i] = Vec<3>(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
  }
  for (bool ch : {false, true}) {
    ReconOptions opt;
    opt.characteristic = ch;
    ReconStats stats;
    FaceTrace1D<3> l, r;
    trace_face_1d(m, std::span<const Vec<3>, 4>(w), std::span<const Vec<3>, 4>(v), 0.1, opt, l, r, &stats);
    CHECK(stats.weight_evaluations == 6);
    CHECK(stats.reconstructions == 6);
  }
}

//------------------------------------------------------------------------------
// 2D

namespace {

// Separable test functions given by their 1D factor averages.
struct Factor {
  std::function<double(double, double)> avg;    // mean over [a, b]
  std::function<double(double, double)> davg;   // mean of the derivative over [a, b]
  std::function<double(int, double)> deriv;     // k-th derivative at a point
};

Factor poly_sq() {
  return {[](double a, double b) { return (b * b * b - a * a * a) / (3 * (b - a)); },
          [](double a, double b) { return (b * b - a * a) / (b - a); },
          [](int k, double x) { return k == 0 ? x * x : k == 1 ? 2 * x : k == 2 ? 2.0 : 0.0; }};
}

template <int Rows>
FaceBlock<1, Rows> separable_block(const Factor& fx, const Factor& fy, double xf, double dx, double y_lo, double dy) {
  FaceBlock<1, Rows> b;
  for (int col = 0; col < 4; ++col) {
    const double a = xf + (col - 2) * dx;
    for (int r = 0; r < Rows; ++r) {
      const double c = y_lo + r * dy;
      const double ax = fx.avg(a, a + dx), dxa = fx.davg(a, a + dx);
      const double ay = fy.avg(c, c + dy), dya = fy.davg(c, c + dy);
      b.w[col][r] = Vec<1>(ax * ay);
      b.v[col][r] = Vec<1>(dxa * ay);
      b.y[col][r] = Vec<1>(ax * dya);
      b.z[col][r] = Vec<1>(dxa * dya);
    }
  }
  return b;
}

}  // namespace

TEST_CASE("2d traces reproduce x^2 y^2 exactly in linear mode") {
  ReconOptions opt;
  opt.weights.mode = WeightMode::linear;
  const double dx = 0.3, dy = 0.2, xf = 0.45, yrow = 0.8;  // centre row [0.8, 1.0]
  const Factor f = poly_sq();
  const auto blk = separable_block<3>(f, f, xf, dx, yrow - dy, dy);
  std::array<double, 3> eta{FaceGauss::nodes[0], FaceGauss::nodes[1], FaceGauss::nodes[2]};
  std::array<FaceTrace2D<1>, 3> left, right;
  trace_row_2d(Burgers{}, blk, dx, dy, std::span<const double, 3>(eta), opt, left, right);
  for (int p = 0; p < 3; ++p) {
    const double yq = yrow + (0.5 + eta[p]) * dy;
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; m + n <= 4; ++n) {
        const double exact = f.deriv(m, xf) * f.deriv(n, yq);
        CHECK(std::abs(left[p].at(m, n)[0] - exact) < 1e-10);
        CHECK(std::abs(right[p].at(m, n)[0] - exact) < 1e-10);
      }
  }
  // corner at (xf, yrow): rows yrow-2dy .. yrow+dy
  const auto cblk = separable_block<4>(f, f, xf, dx, yrow - 2 * dy, dy);
  FaceTrace2D<1> cl, cr;
  trace_corner_2d(Burgers{}, cblk, dx, dy, opt, cl, cr);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n) {
      const double exact = f.deriv(m, xf) * f.deriv(n, yrow);
      CHECK(std::abs(cl.at(m, n)[0] - exact) < 1e-10);
      CHECK(std::abs(cr.at(m, n)[0] - exact) < 1e-10);
    }
}

TEST_CASE("2d traces: constant data and weight reuse") {
  const Euler2D m;
  const Vec<4> c = m.to_conserved(Vec<4>(1.0, 0.3, -0.2, 1.0));
  FaceBlock<4, 3> blk;
  for (int col = 0; col < 4; ++col)
    for (int r = 0; r < 3; ++r) {
      blk.w[col][r] = c;
      blk.v[col][r] = blk.y[col][r] = blk.z[col][r] = Vec<4>::Zero();
    }
  std::array<double, 3> eta{FaceGauss::nodes[0], FaceGauss::nodes[1], FaceGauss::nodes[2]};
  for (bool ch : {false, true}) {
    ReconOptions opt;
    opt.characteristic = ch;
    ReconStats stats;
    std::array<FaceTrace2D<4>, 3> l, r;
    trace_row_2d(m, blk, 0.1, 0.1, std::span<const double, 3>(eta), opt, l, r, &stats);
    for (int p = 0; p < 3; ++p) {
      CHECK((l[p].at(0, 0) - c).cwiseAbs().maxCoeff() < 1e-14);
      for (int e = 1; e < FaceTrace2D<4>::kEntries; ++e) {
        CHECK(l[p].derivs[e].cwiseAbs().maxCoeff() < 1e-9);
        CHECK(r[p].derivs[e].cwiseAbs().maxCoeff() < 1e-9);
      }
    }
    // per component: 4 columns x 2 transverse reconstructions, then one
    // weight evaluation per side and point for all five normal reconstructions
    CHECK(stats.weight_evaluations == 4 * (8 + 6));
    CHECK(stats.reconstructions == 4 * (8 + 6 * 5));
  }
}

TEST_CASE("2d traces converge on sin(pi (x + y))") {
  const double xf = 0.35, yrow = 0.6;
  const std::array<std::pair<int, int>, 6> entries{{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}}};
  std::array<double, 3> eta{FaceGauss::nodes[0], FaceGauss::nodes[1], FaceGauss::nodes[2]};
  // nonlinear weights only settle once the derivative data are resolved
  for (auto [mode, h0] : {std::pair{WeightMode::linear, 0.05}, std::pair{WeightMode::nonlinear, 0.0125}}) {
  std::array<double, 6> prev{};
  for (int level = 0; level < 3; ++level) {
    const double h = h0 / (1 << level);
    FaceBlock<1, 3> blk;
    for (int col = 0; col < 4; ++col)
      for (int r = 0; r < 3; ++r) {
        const double xc = xf + (col - 1.5) * h, yc = yrow + (r - 1) * h;
        const double s = S(h) * S(h);
        blk.w[col][r] = Vec<1>(std::sin(kPi * (xc + yc)) * s);
        blk.v[col][r] = blk.y[col][r] = Vec<1>(kPi * std::cos(kPi * (xc + yc)) * s);
        blk.z[col][r] = Vec<1>(-kPi * kPi * std::sin(kPi * (xc + yc)) * s);
      }
    std::array<FaceTrace2D<1>, 3> l, r;
    ReconOptions opt;
    opt.weights.mode = mode;
    trace_row_2d(Burgers{}, blk, h, h, std::span<const double, 3>(eta), opt, l, r);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const auto [m, n] = entries[e];
      double err = 0.0;
      for (int p = 0; p < 3; ++p) {
        const double yq = yrow + eta[p] * h;
        const double exact = std::pow(kPi, m + n) * std::sin(kPi * (xf + yq) + (m + n) * kPi / 2);
        err = std::max({err, std::abs(l[p].at(m, n)[0] - exact), std::abs(r[p].at(m, n)[0] - exact)});
      }
      if (level > 0) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(h);
        CHECK(std::log2(prev[e] / err) >= 5 - (m + n) - 0.35);
      }
      prev[e] = err;
    }
  }
  }
}

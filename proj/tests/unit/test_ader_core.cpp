#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "ader/grp.hpp"
#include "ader/quadrature.hpp"

using namespace ader;
using testing_support::uniform;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("lobatto rule: nodes, weights, moments") {
  const QuadratureRule q = gauss_lobatto_4();
  REQUIRE(q.count == 4);
  CHECK(q.nodes[0] == 0.0);
  CHECK(q.nodes[3] == 1.0);
  CHECK(q.ends_at_one());
  for (int i = 1; i < 4; ++i) CHECK(q.nodes[i] > q.nodes[i - 1]);
  CHECK(q.nodes[1] == doctest::Approx((1 - 1 / std::sqrt(5.0)) / 2).epsilon(1e-15));
  CHECK(q.nodes[2] == doctest::Approx((1 + 1 / std::sqrt(5.0)) / 2).epsilon(1e-15));
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) sum += q.weights[i];
  CHECK(std::abs(sum - 1.0) <= 1e-15);
  for (int m = 0; m <= 5; ++m) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += q.weights[i] * std::pow(q.nodes[i], m);
    CHECK(std::abs(s - 1.0 / (m + 1)) <= 1e-14);
  }
  // weights regenerated from the moment system on the same nodes
  Eigen::Matrix4d v;
  Eigen::Vector4d rhs;
  for (int m = 0; m < 4; ++m) {
    for (int i = 0; i < 4; ++i) v(m, i) = std::pow(q.nodes[i], m);
    rhs[m] = 1.0 / (m + 1);
  }
  const Eigen::Vector4d w = v.fullPivLu().solve(rhs);
  for (int i = 0; i < 4; ++i) CHECK(q.weights[i] == doctest::Approx(w[i]).epsilon(1e-14));
  CHECK(w[0] == doctest::Approx(1.0 / 12).epsilon(1e-14));
  CHECK(w[1] == doctest::Approx(5.0 / 12).epsilon(1e-14));
}

TEST_CASE("gauss rules integrate to their degree") {
  for (int n : {2, 3, 5, 8}) {
    const QuadratureRule q = gauss_legendre_rule(n);
    for (int m = 0; m < 2 * n; ++m) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += q.weights[i] * std::pow(q.nodes[i], m);
      CHECK(std::abs(s - 1.0 / (m + 1)) <= 1e-14);
    }
  }
  const LineRule g10 = gauss_legendre_centered(10);
  for (int m = 0; m < 20; ++m) {
    double s = 0.0;
    for (int i = 0; i < 10; ++i) s += g10.weights[i] * std::pow(g10.nodes[i], m);
    const double exact = m % 2 ? 0.0 : std::pow(0.5, m) / (m + 1);
    CHECK(std::abs(s - exact) <= 1e-15);
  }
  double fs = 0.0;
  for (int i = 0; i < 3; ++i) fs += FaceGauss::weights[i] * std::pow(FaceGauss::nodes[i], 4);
  CHECK(fs == doctest::Approx(1.0 / 80).epsilon(1e-14));
}

TEST_CASE("evaluate taylor") {
  TimeTaylor<1> t;
  for (auto& a : t.a) a = Vec<1>(0.0);
  t.a[0] = Vec<1>(1.0);
  t.a[1] = Vec<1>(1.0);
  CHECK(evaluate_taylor(t, 0.0)[0] == 1.0);
  CHECK(evaluate_taylor(t, 0.5)[0] == 1.5);
  for (int trial = 0; trial < 200; ++trial) {
    TimeTaylor<3> r;
    for (auto& a : r.a) a = Vec<3>(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
    const double tau = uniform(0, 0.1);
    Vec<3> naive = Vec<3>::Zero();
    for (int k = 0; k <= 4; ++k) naive += r.a[k] * std::pow(tau, k);
    CHECK((evaluate_taylor(r, tau) - naive).cwiseAbs().maxCoeff() <= 1e-15 * 4);
    CHECK(evaluate_taylor(r, 0.0) == r.a[0]);
  }
}

TEST_CASE("time averaged flux") {
  const QuadratureRule rule = gauss_lobatto_4();
  TimeTaylor<3> c;
  const Vec<3> w = Euler1D{}.to_conserved(Vec<3>(1.1, 0.4, 0.8));
  c.a[0] = w;
  for (int k = 1; k <= 4; ++k) c.a[k] = Vec<3>::Zero();
  const auto avg = time_average_flux(Euler1D{}, c, 0.3, rule);
  CHECK((avg.flux - Euler1D{}.flux(w)).cwiseAbs().maxCoeff() <= 1e-15 * 4);
  REQUIRE(avg.count == 4);
  CHECK(avg.states[3] == evaluate_taylor(c, 0.3));

  // linear flux, quartic state: quadrature equals the closed-form average
  const LinearAdvection adv{-1.7};
  TimeTaylor<1> q;
  for (auto& a : q.a) a = Vec<1>(uniform(-1, 1));
  const double dt = 0.37;
  double exact = 0.0;
  for (int k = 0; k <= 4; ++k) exact += q.a[k][0] * std::pow(dt, k) / (k + 1);
  CHECK(std::abs(time_average_flux(adv, q, dt, rule).flux[0] - adv.speed * exact) <= 1e-14);

  // Burgers flux w^2/2 of T(tau) = tau over [0, 1]: 1/6
  TimeTaylor<1> lin;
  for (auto& a : lin.a) a = Vec<1>(0.0);
  lin.a[1] = Vec<1>(1.0);
  CHECK(std::abs(time_average_flux(Burgers{}, lin, 1.0, rule).flux[0] - 1.0 / 6.0) <= 1e-15);
}

TEST_CASE("non-physical node state aborts with the node") {
  TimeTaylor<3> t;
  t.a[0] = Vec<3>(1.0, 0.0, 2.5);
  t.a[1] = Vec<3>(-10.0, 0.0, 0.0);
  for (int k = 2; k <= 4; ++k) t.a[k] = Vec<3>::Zero();
  try {
    time_average_flux(Euler1D{}, t, 0.5, gauss_lobatto_4());
    FAIL("expected a PhysicsError");
  } catch (const PhysicsError& e) {
    CHECK(std::string(e.what()).find("time node") != std::string::npos);
  }
}

TEST_CASE("grp on constant traces") {
  const Euler1D m;
  const Vec<3> w = m.to_conserved(Vec<3>(0.9, -0.2, 1.3));
  FaceTrace1D<3> l, r;
  l.derivs[0] = r.derivs[0] = w;
  for (int k = 1; k < 5; ++k) l.derivs[k] = r.derivs[k] = Vec<3>::Zero();
  GrpStats stats;
  const auto t = grp_time_taylor(m, l, r, &stats);
  CHECK((t.a[0] - w).cwiseAbs().maxCoeff() <= 1e-15 * 3);
  for (int k = 1; k <= 4; ++k) CHECK(t.a[k].cwiseAbs().maxCoeff() == 0.0);
  CHECK(stats.solves == 1);
  CHECK(stats.eigensystems == 1);

  const Euler2D m2;
  const Vec<4> w2 = m2.to_conserved(Vec<4>(0.9, -0.2, 0.5, 1.3));
  FaceTrace2D<4> l2, r2;
  for (auto& d : l2.derivs) d = Vec<4>::Zero();
  r2 = l2;
  l2.at(0, 0) = r2.at(0, 0) = w2;
  const auto t2 = grp_time_taylor(m2, l2, r2);
  CHECK((t2.a[0] - w2).cwiseAbs().maxCoeff() <= 1e-15 * 3);
  for (int k = 1; k <= 4; ++k) CHECK(t2.a[k].cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("grp: burgers first coefficient") {
  FaceTrace1D<1> l, r;
  l.derivs = {Vec<1>(1.2), Vec<1>(0.7), Vec<1>(0.1), Vec<1>(0.0), Vec<1>(0.0)};
  r.derivs = {Vec<1>(1.1), Vec<1>(-0.4), Vec<1>(0.2), Vec<1>(0.0), Vec<1>(0.0)};
  const auto t = grp_time_taylor(Burgers{}, l, r);
  CHECK(t.a[0][0] == 1.2);
  CHECK(t.a[1][0] == doctest::Approx(-1.2 * 0.7).epsilon(1e-15));
}

TEST_CASE("grp: advection taylor polynomial is fifth order") {
  // traces reconstructed from exact averages of sin(pi x) at spacing dx, the
  // interface polynomial then evaluated at tau = dx
  const LinearAdvection adv{1.0};
  const double xf = 0.3;
  double prev = 0.0;
  for (int level = 0; level < 4; ++level) {
    const double dx = 0.05 / (1 << level);
    const double s = std::sin(kPi * dx / 2) / (kPi * dx / 2);
    std::array<Vec<1>, 4> w, v;
    for (int i = 0; i < 4; ++i) {
      const double xc = xf + (i - 1.5) * dx;
      w[i] = Vec<1>(std::sin(kPi * xc) * s);
      v[i] = Vec<1>(kPi * std::cos(kPi * xc) * s);
    }
    FaceTrace1D<1> l, r;
    trace_face_1d(adv, std::span<const Vec<1>, 4>(w), std::span<const Vec<1>, 4>(v), dx, ReconOptions{}, l, r);
    const auto t = grp_time_taylor(adv, l, r);
    const double err = std::abs(evaluate_taylor(t, dx)[0] - std::sin(kPi * (xf - dx)));
    if (level > 0) {
      CAPTURE(level);
      CHECK(std::log2(prev / err) >= 4.7);
    }
    prev = err;
  }
}

TEST_CASE("grp: advection upwinds the derivative data") {
  FaceTrace1D<1> l, r;
  for (int k = 0; k < 5; ++k) {
    l.derivs[k] = Vec<1>(uniform(-1, 1));
    r.derivs[k] = Vec<1>(uniform(-1, 1));
  }
  const auto t = grp_time_taylor(LinearAdvection{2.0}, l, r);
  for (int k = 1; k <= 4; ++k)
    CHECK(t.a[k][0] == doctest::Approx(std::pow(-2.0, k) * l.derivs[k][0] / std::tgamma(k + 1.0)).epsilon(1e-14));
}

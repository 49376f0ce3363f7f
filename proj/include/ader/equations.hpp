#pragma once

// Conservation-law models. Each model exposes the pointwise algebra the scheme
// needs (flux, Jacobian eigensystem, primitive map, wavespeeds) plus a
// slice-wise flux program over jets for the Cauchy-Kovalevskaya fill.
//
// Two-dimensional models are always driven along x: y-direction quantities are
// obtained by rotating the state (swapping the momentum components).

#include <cmath>
#include <sstream>
#include <string>
#include <string_view>

#include "ader/error.hpp"
#include "ader/jets.hpp"
#include "ader/linalg.hpp"

namespace ader {

/// Ratio of specific heats for every Euler model.
inline constexpr double kGamma = 1.4;

/// Density and pressure must exceed this for a state to count as physical.
inline constexpr double kPhysicalFloor = 1e-13;

template <int NC>
struct Eigensystem {
  Vec<NC> values;  // ascending
  Mat<NC> left;    // rows are left eigenvectors
  Mat<NC> right;   // columns are right eigenvectors
};

namespace detail {

template <int NC>
inline void require_finite(const Vec<NC>& w, std::string_view model) {
  for (int i = 0; i < NC; ++i) {
    if (!std::isfinite(w[i])) {
      std::ostringstream os;
      os << model << ": non-finite state component " << i;
      throw PhysicsError(os.str());
    }
  }
}

}  // namespace detail

//------------------------------------------------------------------------------
// Scalar models

/// Inviscid Burgers equation, F(w) = w^2 / 2.
struct Burgers {
  static constexpr int kDim = 1;
  static constexpr int kComps = 1;
  static constexpr bool kSystem = false;
  using State = Vec<1>;

  static constexpr std::string_view name() { return "burgers"; }

  void check_physical(const State& w) const { detail::require_finite<1>(w, name()); }
  bool is_physical(const State& w) const { return std::isfinite(w[0]); }

  State flux(const State& w, Axis = Axis::x) const { return State(0.5 * w[0] * w[0]); }
  Mat<1> jacobian(const State& w, Axis = Axis::x) const { return Mat<1>::Constant(w[0]); }
  Eigensystem<1> eigensystem(const State& w, Axis = Axis::x) const {
    return {State(w[0]), Mat<1>::Identity(), Mat<1>::Identity()};
  }
  double max_wavespeed(const State& w, Axis = Axis::x) const { return std::abs(w[0]); }
  State to_primitive(const State& w) const { return w; }
  State to_conserved(const State& q) const { return q; }

  template <int Dim>
  struct JetWork {};

  template <int Dim>
  void flux_jet_slice(const JetState<Dim, 1>& w, JetWork<Dim>&, int slice, JetState<Dim, 1>& f) const {
    mul_slice(f[0], w[0], w[0], slice);
    using L = JetLayout<Dim>;
    for (int i = L::slice_start[slice]; i < L::slice_start[slice + 1]; ++i) f[0][i] *= 0.5;
  }
};

/// Linear advection F(w) = a w with constant speed a.
struct LinearAdvection {
  static constexpr int kDim = 1;
  static constexpr int kComps = 1;
  static constexpr bool kSystem = false;
  using State = Vec<1>;

  double speed = 1.0;

  static constexpr std::string_view name() { return "advection"; }

  void check_physical(const State& w) const { detail::require_finite<1>(w, name()); }
  bool is_physical(const State& w) const { return std::isfinite(w[0]); }

  State flux(const State& w, Axis = Axis::x) const { return State(speed * w[0]); }
  Mat<1> jacobian(const State&, Axis = Axis::x) const { return Mat<1>::Constant(speed); }
  Eigensystem<1> eigensystem(const State&, Axis = Axis::x) const {
    return {State(speed), Mat<1>::Identity(), Mat<1>::Identity()};
  }
  double max_wavespeed(const State&, Axis = Axis::x) const { return std::abs(speed); }
  State to_primitive(const State& w) const { return w; }
  State to_conserved(const State& q) const { return q; }

  template <int Dim>
  struct JetWork {};

  template <int Dim>
  void flux_jet_slice(const JetState<Dim, 1>& w, JetWork<Dim>&, int slice, JetState<Dim, 1>& f) const {
    using L = JetLayout<Dim>;
    for (int i = L::slice_start[slice]; i < L::slice_start[slice + 1]; ++i) f[0][i] = speed * w[0][i];
  }
};

//------------------------------------------------------------------------------
// Euler equations

namespace detail {

inline void require_positive(double rho, double p, std::string_view model) {
  if (!(rho > kPhysicalFloor)) {
    std::ostringstream os;
    os << model << ": non-physical density rho=" << rho;
    throw PhysicsError(os.str());
  }
  if (!(p > kPhysicalFloor)) {
    std::ostringstream os;
    os << model << ": non-physical pressure P=" << p;
    throw PhysicsError(os.str());
  }
}

}  // namespace detail

/// 1D Euler equations, W = (rho, rho u, E).
struct Euler1D {
  static constexpr int kDim = 1;
  static constexpr int kComps = 3;
  static constexpr bool kSystem = true;
  using State = Vec<3>;

  static constexpr std::string_view name() { return "euler1d"; }

  static double pressure(const State& w) { return (kGamma - 1.0) * (w[2] - 0.5 * w[1] * w[1] / w[0]); }

  void check_physical(const State& w) const {
    detail::require_finite<3>(w, name());
    detail::require_positive(w[0], pressure(w), name());
  }
  bool is_physical(const State& w) const {
    return w.allFinite() && w[0] > kPhysicalFloor && pressure(w) > kPhysicalFloor;
  }

  State flux(const State& w, Axis = Axis::x) const {
    check_physical(w);
    const double u = w[1] / w[0];
    const double p = pressure(w);
    return State(w[1], w[1] * u + p, u * (w[2] + p));
  }

  Mat<3> jacobian(const State& w, Axis = Axis::x) const {
    check_physical(w);
    const double u = w[1] / w[0];
    const double g1 = kGamma - 1.0;
    const double e = w[2] / w[0];
    Mat<3> a;
    a << 0.0, 1.0, 0.0,                                                   //
        0.5 * (kGamma - 3.0) * u * u, (3.0 - kGamma) * u, g1,             //
        -kGamma * u * e + g1 * u * u * u, kGamma * e - 1.5 * g1 * u * u, kGamma * u;
    return a;
  }

  Eigensystem<3> eigensystem(const State& w, Axis = Axis::x) const {
    check_physical(w);
    const double u = w[1] / w[0];
    const double p = pressure(w);
    const double a = std::sqrt(kGamma * p / w[0]);
    const double h = (w[2] + p) / w[0];
    Eigensystem<3> es;
    es.values << u - a, u, u + a;
    es.right << 1.0, 1.0, 1.0,  //
        u - a, u, u + a,        //
        h - u * a, 0.5 * u * u, h + u * a;
    const double b1 = (kGamma - 1.0) / (a * a);
    const double b2 = 0.5 * u * u * b1;
    es.left << 0.5 * (b2 + u / a), -0.5 * (b1 * u + 1.0 / a), 0.5 * b1,  //
        1.0 - b2, b1 * u, -b1,                                          //
        0.5 * (b2 - u / a), -0.5 * (b1 * u - 1.0 / a), 0.5 * b1;
    return es;
  }

  double max_wavespeed(const State& w, Axis = Axis::x) const {
    check_physical(w);
    return std::abs(w[1] / w[0]) + std::sqrt(kGamma * pressure(w) / w[0]);
  }

  /// (rho, u, P)
  State to_primitive(const State& w) const {
    check_physical(w);
    return State(w[0], w[1] / w[0], pressure(w));
  }
  State to_conserved(const State& q) const {
    detail::require_positive(q[0], q[2], name());
    return State(q[0], q[0] * q[1], q[2] / (kGamma - 1.0) + 0.5 * q[0] * q[1] * q[1]);
  }

  template <int Dim>
  struct JetWork {
    Jet<Dim> u, mu, p, h;
  };

  template <int Dim>
  void flux_jet_slice(const JetState<Dim, 3>& w, JetWork<Dim>& work, int slice, JetState<Dim, 3>& f) const {
    using L = JetLayout<Dim>;
    div_slice(work.u, w[1], w[0], slice);
    mul_slice(work.mu, w[1], work.u, slice);
    for (int i = L::slice_start[slice]; i < L::slice_start[slice + 1]; ++i) {
      work.p[i] = (kGamma - 1.0) * (w[2][i] - 0.5 * work.mu[i]);
      work.h[i] = w[2][i] + work.p[i];
      f[0][i] = w[1][i];
      f[1][i] = work.mu[i] + work.p[i];
    }
    mul_slice(f[2], work.h, work.u, slice);
  }
};

/// 2D Euler equations, W = (rho, rho mu, rho nu, E).
struct Euler2D {
  static constexpr int kDim = 2;
  static constexpr int kComps = 4;
  static constexpr bool kSystem = true;
  using State = Vec<4>;

  static constexpr std::string_view name() { return "euler2d"; }

  static double pressure(const State& w) {
    return (kGamma - 1.0) * (w[3] - 0.5 * (w[1] * w[1] + w[2] * w[2]) / w[0]);
  }

  /// Swaps the momentum components; maps y-direction problems onto x.
  static State rotate(const State& w) { return State(w[0], w[2], w[1], w[3]); }

  void check_physical(const State& w) const {
    detail::require_finite<4>(w, name());
    detail::require_positive(w[0], pressure(w), name());
  }
  bool is_physical(const State& w) const {
    return w.allFinite() && w[0] > kPhysicalFloor && pressure(w) > kPhysicalFloor;
  }

  State flux(const State& w, Axis axis = Axis::x) const {
    if (axis == Axis::y) return rotate(flux(rotate(w), Axis::x));
    check_physical(w);
    const double u = w[1] / w[0];
    const double p = pressure(w);
    return State(w[1], w[1] * u + p, w[2] * u, u * (w[3] + p));
  }

  Mat<4> jacobian(const State& w, Axis axis = Axis::x) const {
    if (axis == Axis::y) {
      const Mat<4> ax = jacobian(rotate(w), Axis::x);
      Mat<4> perm = Mat<4>::Zero();
      perm(0, 0) = perm(1, 2) = perm(2, 1) = perm(3, 3) = 1.0;
      return perm * ax * perm;
    }
    check_physical(w);
    const double u = w[1] / w[0];
    const double v = w[2] / w[0];
    const double g1 = kGamma - 1.0;
    const double e = w[3] / w[0];
    const double q2 = u * u + v * v;
    Mat<4> a;
    a << 0.0, 1.0, 0.0, 0.0,                                            //
        0.5 * g1 * q2 - u * u, (3.0 - kGamma) * u, -g1 * v, g1,         //
        -u * v, v, u, 0.0,                                              //
        u * (g1 * q2 - kGamma * e), kGamma * e - 0.5 * g1 * q2 - g1 * u * u, -g1 * u * v, kGamma * u;
    return a;
  }

  Eigensystem<4> eigensystem(const State& w, Axis axis = Axis::x) const {
    if (axis == Axis::y) {
      Eigensystem<4> es = eigensystem(rotate(w), Axis::x);
      es.left.col(1).swap(es.left.col(2));
      es.right.row(1).swap(es.right.row(2));
      return es;
    }
    check_physical(w);
    const double u = w[1] / w[0];
    const double v = w[2] / w[0];
    const double p = pressure(w);
    const double a = std::sqrt(kGamma * p / w[0]);
    const double h = (w[3] + p) / w[0];
    const double q2 = u * u + v * v;
    Eigensystem<4> es;
    es.values << u - a, u, u, u + a;
    es.right << 1.0, 1.0, 0.0, 1.0,  //
        u - a, u, 0.0, u + a,        //
        v, v, 1.0, v,                //
        h - u * a, 0.5 * q2, v, h + u * a;
    const double b1 = (kGamma - 1.0) / (a * a);
    const double b2 = 0.5 * q2 * b1;
    es.left << 0.5 * (b2 + u / a), -0.5 * (b1 * u + 1.0 / a), -0.5 * b1 * v, 0.5 * b1,  //
        1.0 - b2, b1 * u, b1 * v, -b1,                                                 //
        -v, 0.0, 1.0, 0.0,                                                             //
        0.5 * (b2 - u / a), -0.5 * (b1 * u - 1.0 / a), -0.5 * b1 * v, 0.5 * b1;
    return es;
  }

  double max_wavespeed(const State& w, Axis axis = Axis::x) const {
    check_physical(w);
    const int k = axis == Axis::x ? 1 : 2;
    return std::abs(w[k] / w[0]) + std::sqrt(kGamma * pressure(w) / w[0]);
  }

  /// (rho, mu, nu, P)
  State to_primitive(const State& w) const {
    check_physical(w);
    return State(w[0], w[1] / w[0], w[2] / w[0], pressure(w));
  }
  State to_conserved(const State& q) const {
    detail::require_positive(q[0], q[3], name());
    return State(q[0], q[0] * q[1], q[0] * q[2],
                 q[3] / (kGamma - 1.0) + 0.5 * q[0] * (q[1] * q[1] + q[2] * q[2]));
  }

  template <int Dim>
  struct JetWork {
    Jet<Dim> u, v, mu, nv, mv, p, h;
  };

  template <int Dim>
  void flux_jet_slice(const JetState<Dim, 4>& w, JetWork<Dim>& work, int slice, JetState<Dim, 4>& f,
                      JetState<Dim, 4>& g) const {
    using L = JetLayout<Dim>;
    div_slice(work.u, w[1], w[0], slice);
    div_slice(work.v, w[2], w[0], slice);
    mul_slice(work.mu, w[1], work.u, slice);
    mul_slice(work.nv, w[2], work.v, slice);
    mul_slice(work.mv, w[1], work.v, slice);
    for (int i = L::slice_start[slice]; i < L::slice_start[slice + 1]; ++i) {
      work.p[i] = (kGamma - 1.0) * (w[3][i] - 0.5 * (work.mu[i] + work.nv[i]));
      work.h[i] = w[3][i] + work.p[i];
      f[0][i] = w[1][i];
      f[1][i] = work.mu[i] + work.p[i];
      f[2][i] = work.mv[i];
      g[0][i] = w[2][i];
      g[1][i] = work.mv[i];
      g[2][i] = work.nv[i] + work.p[i];
    }
    mul_slice(f[3], work.h, work.u, slice);
    mul_slice(g[3], work.h, work.v, slice);
  }
};

}  // namespace ader

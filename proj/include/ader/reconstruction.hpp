#pragma once

// Simple Hermite WENO (SHWENO) reconstruction on a three-cell stencil.
//
// Each cell combines one Hermite quartic, built from the averages of W on the
// three cells and the averages of W_x on the two outer cells, with two linear
// polynomials through neighbouring averages. Polynomials are expressed in the
// local coordinate xi = (x - x_j) / dx, so cell j is [-1/2, 1/2].

#include <array>
#include <cmath>
#include <span>

#include "ader/equations.hpp"
#include "ader/jets.hpp"
#include "ader/linalg.hpp"

namespace ader {

enum class WeightMode { nonlinear, linear };

struct WeightConfig {
  std::array<double, 3> gamma{0.994, 0.003, 0.003};
  double epsilon = 1e-10;
  WeightMode mode = WeightMode::nonlinear;
};

struct ReconOptions {
  WeightConfig weights;
  bool characteristic = false;
};

/// Cell data for one reconstruction: averages of W on cells j-1, j, j+1 and
/// averages of W_x on cells j-1 and j+1.
struct HermiteStencil {
  std::array<double, 3> wbar{};
  std::array<double, 2> vbar_outer{};
  double dx = 1.0;
};

/// Quartic in xi, coefficients c[0] + c[1] xi + ... + c[4] xi^4.
struct Quartic {
  std::array<double, 5> c{};

  double operator()(double xi) const { return c[0] + xi * (c[1] + xi * (c[2] + xi * (c[3] + xi * c[4]))); }

  /// d^k/dxi^k at xi.
  double derivative(int k, double xi) const {
    switch (k) {
      case 0:
        return (*this)(xi);
      case 1:
        return c[1] + xi * (2.0 * c[2] + xi * (3.0 * c[3] + xi * 4.0 * c[4]));
      case 2:
        return 2.0 * c[2] + xi * (6.0 * c[3] + xi * 12.0 * c[4]);
      case 3:
        return 6.0 * c[3] + xi * 24.0 * c[4];
      case 4:
        return 24.0 * c[4];
      default:
        return 0.0;
    }
  }

  /// Mean over [-1/2, 1/2].
  double cell_average() const { return c[0] + c[2] / 12.0 + c[4] / 80.0; }
};

/// Reconstructed polynomial of one cell, with derivatives in physical units.
struct CellPolynomial {
  Quartic poly;
  double dx = 1.0;

  double value(double xi) const { return poly(xi); }
  double derivative(int k, double xi) const { return poly.derivative(k, xi) / std::pow(dx, k); }
};

/// Hermite quartic from scaled data (vm, vp are dx times the derivative averages).
inline Quartic hermite_quartic(double wm, double w0, double wp, double vm, double vp) {
  Quartic q;
  q.c[0] = (9.0 / 320.0) * (vp - vm) + (287.0 / 240.0) * w0 - (47.0 / 480.0) * (wm + wp);
  q.c[1] = -(5.0 / 16.0) * (vm + vp) + (13.0 / 16.0) * (wp - wm);
  q.c[2] = (3.0 / 8.0) * (vm - vp) - 2.5 * w0 + 1.25 * (wm + wp);
  q.c[3] = 0.25 * (vm + vp) + 0.25 * (wm - wp);
  q.c[4] = 0.25 * (vp - vm) + w0 - 0.5 * (wm + wp);
  return q;
}

inline Quartic build_hermite_quartic(const HermiteStencil& s) {
  return hermite_quartic(s.wbar[0], s.wbar[1], s.wbar[2], s.dx * s.vbar_outer[0], s.dx * s.vbar_outer[1]);
}

/// Jiang-Shu smoothness indicator sum_l dx^(2l-1) int (d^l p / dx^l)^2 dx,
/// which is dx-free in xi coordinates. Exact for any quartic.
inline double smoothness_beta(const Quartic& q) {
  const auto& c = q.c;
  return c[1] * c[1] + 0.5 * c[1] * c[3] + (13.0 / 3.0) * c[2] * c[2] + 4.2 * c[2] * c[4] +
         (3129.0 / 80.0) * c[3] * c[3] + (87617.0 / 140.0) * c[4] * c[4];
}

/// Normalized nonlinear weights of the (quartic, left linear, right linear)
/// candidates.
inline std::array<double, 3> nonlinear_weights(const std::array<double, 3>& beta, const WeightConfig& cfg) {
  if (cfg.mode == WeightMode::linear) return cfg.gamma;
  const double tau0 = 0.5 * (std::abs(beta[0] - beta[1]) + std::abs(beta[0] - beta[2]));
  const double tau = tau0 * tau0;
  if (tau == 0.0) return cfg.gamma;
  std::array<double, 3> w;
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    w[i] = cfg.gamma[i] * (1.0 + tau / (beta[i] + cfg.epsilon));
    sum += w[i];
  }
  for (auto& x : w) x /= sum;
  return w;
}

/// Multipliers of the three candidate polynomials in the SHWENO combination
///   P = w1 (p_big - g2 p_L - g3 p_R) / g1 + w2 p_L + w3 p_R.
struct ShwenoMix {
  double big;
  double left;
  double right;
};

inline ShwenoMix shweno_mix(const std::array<double, 3>& omega, const WeightConfig& cfg) {
  const double r = omega[0] / cfg.gamma[0];
  return {r, omega[1] - r * cfg.gamma[1], omega[2] - r * cfg.gamma[2]};
}

/// Weights for the given scaled stencil data.
inline ShwenoMix shweno_weights(const Quartic& big, double slope_left, double slope_right, const WeightConfig& cfg) {
  if (cfg.mode == WeightMode::linear) return shweno_mix(cfg.gamma, cfg);
  const std::array<double, 3> beta{smoothness_beta(big), slope_left * slope_left, slope_right * slope_right};
  return shweno_mix(nonlinear_weights(beta, cfg), cfg);
}

inline Quartic shweno_combine(const Quartic& big, double w0, double slope_left, double slope_right, const ShwenoMix& mix) {
  Quartic p;
  for (int k = 0; k < 5; ++k) p.c[k] = mix.big * big.c[k];
  p.c[0] += (mix.left + mix.right) * w0;
  p.c[1] += mix.left * slope_left + mix.right * slope_right;
  return p;
}

/// SHWENO polynomial of the centre cell of the stencil.
CellPolynomial shweno_cell(const HermiteStencil& s, const WeightConfig& cfg);

/// Derivatives 0..4 of q at xi in physical units (d/dx = (1/dx) d/dxi).
inline std::array<double, 5> physical_derivatives(const Quartic& q, double xi, double dx) {
  std::array<double, 5> d;
  double scale = 1.0;
  const double inv = 1.0 / dx;
  for (int k = 0; k < 5; ++k) {
    d[k] = q.derivative(k, xi) * scale;
    scale *= inv;
  }
  return d;
}

/// Counts weight evaluations; used to check that derivative extrapolations
/// reuse the weights of the underlying reconstruction.
struct ReconStats {
  long weight_evaluations = 0;
  long reconstructions = 0;
};

//------------------------------------------------------------------------------
// Face traces

/// Boundary-extrapolated derivatives d^k W / dx^k, k = 0..4, at one face.
template <int NC>
struct FaceTrace1D {
  std::array<Vec<NC>, 5> derivs;
};

/// Boundary-extrapolated derivatives d^(m+n) W / dx^m dy^n, m + n <= 4, at one
/// face point. Stored with the spatial monomial ordering of JetLayout<2>.
template <int NC>
struct FaceTrace2D {
  static constexpr int kEntries = JetLayout<2>::kSpatialSize;
  std::array<Vec<NC>, kEntries> derivs;

  static int slot(int m, int n) { return JetLayout<2>::index(m, n, 0); }
  Vec<NC>& at(int m, int n) { return derivs[slot(m, n)]; }
  const Vec<NC>& at(int m, int n) const { return derivs[slot(m, n)]; }
};

namespace detail {

// Scalar SHWENO reconstruction of one cell evaluated at one face.
inline void reconstruct_face_scalar(double wm, double w0, double wp, double vm, double vp, double dx, double xi,
                                    const WeightConfig& cfg, double out[5], ReconStats* stats) {
  const Quartic big = hermite_quartic(wm, w0, wp, dx * vm, dx * vp);
  const double sl = w0 - wm;
  const double sr = wp - w0;
  const ShwenoMix mix = shweno_weights(big, sl, sr, cfg);
  if (stats) {
    ++stats->weight_evaluations;
    ++stats->reconstructions;
  }
  const Quartic p = shweno_combine(big, w0, sl, sr, mix);
  const auto d = physical_derivatives(p, xi, dx);
  for (int k = 0; k < 5; ++k) out[k] = d[k];
}

}  // namespace detail

/// Left trace (from cell f-1 at xi = +1/2) and right trace (from cell f at
/// xi = -1/2) of face f. `w` and `v` hold the averages of W and W_x on cells
/// f-2 .. f+1.
template <class Model>
void trace_face_1d(const Model& model, std::span<const Vec<Model::kComps>, 4> w,
                   std::span<const Vec<Model::kComps>, 4> v, double dx, const ReconOptions& opt,
                   FaceTrace1D<Model::kComps>& left, FaceTrace1D<Model::kComps>& right,
                   ReconStats* stats = nullptr) {
  constexpr int NC = Model::kComps;
  std::array<Vec<NC>, 4> cw;
  std::array<Vec<NC>, 4> cv;
  Eigensystem<NC> es;
  const bool project = opt.characteristic && NC > 1;
  if (project) {
    es = model.eigensystem(Vec<NC>(0.5 * (w[1] + w[2])));
    for (int i = 0; i < 4; ++i) {
      cw[i] = es.left * w[i];
      cv[i] = es.left * v[i];
    }
  } else {
    for (int i = 0; i < 4; ++i) {
      cw[i] = w[i];
      cv[i] = v[i];
    }
  }
  double dl[5];
  double dr[5];
  for (int c = 0; c < NC; ++c) {
    detail::reconstruct_face_scalar(cw[0][c], cw[1][c], cw[2][c], cv[0][c], cv[2][c], dx, 0.5, opt.weights, dl,
                                    stats);
    detail::reconstruct_face_scalar(cw[1][c], cw[2][c], cw[3][c], cv[1][c], cv[3][c], dx, -0.5, opt.weights, dr,
                                    stats);
    for (int k = 0; k < 5; ++k) {
      left.derivs[k][c] = dl[k];
      right.derivs[k][c] = dr[k];
    }
  }
  if (project) {
    for (int k = 0; k < 5; ++k) {
      left.derivs[k] = es.right * left.derivs[k];
      right.derivs[k] = es.right * right.derivs[k];
    }
  }
}

/// Averages needed around an x-face for the dimension-by-dimension
/// reconstruction: columns f-2 .. f+1 and `Rows` consecutive rows. v, y, z are
/// the averages of W_x, W_y and W_xy.
template <int NC, int Rows>
struct FaceBlock {
  std::array<std::array<Vec<NC>, Rows>, 4> w, v, y, z;
};

namespace detail {

// Stage 1: transverse reconstruction of one column evaluated at the given
// transverse positions. out[p][n] = d^n/dy^n of the line-average function.
inline void column_eval(const double* wcol, const double* ycol, double dy, const WeightConfig& cfg,
                        std::span<const double> eta, double (*out)[5], ReconStats* stats) {
  const Quartic big = hermite_quartic(wcol[0], wcol[1], wcol[2], dy * ycol[0], dy * ycol[2]);
  const double sl = wcol[1] - wcol[0];
  const double sr = wcol[2] - wcol[1];
  const ShwenoMix mix = shweno_weights(big, sl, sr, cfg);
  if (stats) {
    ++stats->weight_evaluations;
    ++stats->reconstructions;
  }
  const Quartic p = shweno_combine(big, wcol[1], sl, sr, mix);
  for (std::size_t i = 0; i < eta.size(); ++i) {
    const auto d = physical_derivatives(p, eta[i], dy);
    for (int n = 0; n < 5; ++n) out[i][n] = d[n];
  }
}

// Stage 2: normal reconstruction at one face point from line averages of
// d^n W / dy^n (f) and of d^n W_x / dy^n (fx) on columns f-2 .. f+1. Weights
// are computed once from the n = 0 data and reused for every n.
inline void normal_stage(const double (&f)[4][5], const double (&fx)[4][5], double dx, const WeightConfig& cfg,
                         double* left, double* right, ReconStats* stats) {
  using L = JetLayout<2>;
  for (int side = 0; side < 2; ++side) {
    const int c0 = side;  // left cell uses columns 0..2, right cell 1..3
    const double xi = side == 0 ? 0.5 : -0.5;
    double* out = side == 0 ? left : right;
    ShwenoMix mix{};
    for (int n = 0; n <= kJetDegree; ++n) {
      const double wm = f[c0][n], w0 = f[c0 + 1][n], wp = f[c0 + 2][n];
      const Quartic big = hermite_quartic(wm, w0, wp, dx * fx[c0][n], dx * fx[c0 + 2][n]);
      const double sl = w0 - wm;
      const double sr = wp - w0;
      if (n == 0) {
        mix = shweno_weights(big, sl, sr, cfg);
        if (stats) ++stats->weight_evaluations;
      }
      if (stats) ++stats->reconstructions;
      const Quartic p = shweno_combine(big, w0, sl, sr, mix);
      double scale = 1.0;
      for (int m = 0; m + n <= kJetDegree; ++m) {
        out[L::index(m, n, 0)] = p.derivative(m, xi) * scale;
        scale /= dx;
      }
    }
  }
}

}  // namespace detail

/// Traces at the three Gauss points of an x-face, from a block whose centre row
/// (index 1) is the face row. dx is the normal spacing, dy the transverse one.
template <class Model, int NC = Model::kComps>
void trace_row_2d(const Model& model, const FaceBlock<NC, 3>& blk, double dx, double dy, std::span<const double, 3> eta,
                  const ReconOptions& opt, std::array<FaceTrace2D<NC>, 3>& left,
                  std::array<FaceTrace2D<NC>, 3>& right, ReconStats* stats = nullptr) {
  Eigensystem<NC> es;
  const bool project = opt.characteristic && NC > 1;
  if (project) es = model.eigensystem(Vec<NC>(0.5 * (blk.w[1][1] + blk.w[2][1])));
  constexpr int kE = FaceTrace2D<NC>::kEntries;
  for (int c = 0; c < NC; ++c) {
    double f[3][4][5];
    double fx[3][4][5];
    for (int col = 0; col < 4; ++col) {
      double wcol[3], ycol[3], vcol[3], zcol[3];
      for (int r = 0; r < 3; ++r) {
        if (project) {
          wcol[r] = es.left.row(c).dot(blk.w[col][r]);
          ycol[r] = es.left.row(c).dot(blk.y[col][r]);
          vcol[r] = es.left.row(c).dot(blk.v[col][r]);
          zcol[r] = es.left.row(c).dot(blk.z[col][r]);
        } else {
          wcol[r] = blk.w[col][r][c];
          ycol[r] = blk.y[col][r][c];
          vcol[r] = blk.v[col][r][c];
          zcol[r] = blk.z[col][r][c];
        }
      }
      double ew[3][5], ex[3][5];
      detail::column_eval(wcol, ycol, dy, opt.weights, eta, ew, stats);
      detail::column_eval(vcol, zcol, dy, opt.weights, eta, ex, stats);
      for (int p = 0; p < 3; ++p)
        for (int n = 0; n < 5; ++n) {
          f[p][col][n] = ew[p][n];
          fx[p][col][n] = ex[p][n];
        }
    }
    for (int p = 0; p < 3; ++p) {
      double dl[kE], dr[kE];
      detail::normal_stage(f[p], fx[p], dx, opt.weights, dl, dr, stats);
      for (int e = 0; e < kE; ++e) {
        left[p].derivs[e][c] = dl[e];
        right[p].derivs[e][c] = dr[e];
      }
    }
  }
  if (project) {
    for (int p = 0; p < 3; ++p)
      for (int e = 0; e < kE; ++e) {
        left[p].derivs[e] = es.right * left[p].derivs[e];
        right[p].derivs[e] = es.right * right[p].derivs[e];
      }
  }
}

/// Traces at the corner between rows 1 and 2 of the block (rows 0..3 are the
/// corner's rows fy-2 .. fy+1). The transverse evaluations from the two rows
/// meeting at the corner are averaged before the normal stage.
template <class Model, int NC = Model::kComps>
void trace_corner_2d(const Model& model, const FaceBlock<NC, 4>& blk, double dx, double dy, const ReconOptions& opt,
                     FaceTrace2D<NC>& left, FaceTrace2D<NC>& right, ReconStats* stats = nullptr) {
  Eigensystem<NC> es;
  const bool project = opt.characteristic && NC > 1;
  if (project) {
    es = model.eigensystem(Vec<NC>(0.25 * (blk.w[1][1] + blk.w[2][1] + blk.w[1][2] + blk.w[2][2])));
  }
  constexpr int kE = FaceTrace2D<NC>::kEntries;
  static constexpr std::array<double, 1> kTop{0.5};
  static constexpr std::array<double, 1> kBottom{-0.5};
  for (int c = 0; c < NC; ++c) {
    double f[4][5];
    double fx[4][5];
    for (int col = 0; col < 4; ++col) {
      double wcol[4], ycol[4], vcol[4], zcol[4];
      for (int r = 0; r < 4; ++r) {
        if (project) {
          wcol[r] = es.left.row(c).dot(blk.w[col][r]);
          ycol[r] = es.left.row(c).dot(blk.y[col][r]);
          vcol[r] = es.left.row(c).dot(blk.v[col][r]);
          zcol[r] = es.left.row(c).dot(blk.z[col][r]);
        } else {
          wcol[r] = blk.w[col][r][c];
          ycol[r] = blk.y[col][r][c];
          vcol[r] = blk.v[col][r][c];
          zcol[r] = blk.z[col][r][c];
        }
      }
      double lo_w[1][5], hi_w[1][5], lo_x[1][5], hi_x[1][5];
      detail::column_eval(wcol, ycol, dy, opt.weights, kTop, lo_w, stats);
      detail::column_eval(wcol + 1, ycol + 1, dy, opt.weights, kBottom, hi_w, stats);
      detail::column_eval(vcol, zcol, dy, opt.weights, kTop, lo_x, stats);
      detail::column_eval(vcol + 1, zcol + 1, dy, opt.weights, kBottom, hi_x, stats);
      for (int n = 0; n < 5; ++n) {
        f[col][n] = 0.5 * (lo_w[0][n] + hi_w[0][n]);
        fx[col][n] = 0.5 * (lo_x[0][n] + hi_x[0][n]);
      }
    }
    double dl[kE], dr[kE];
    detail::normal_stage(f, fx, dx, opt.weights, dl, dr, stats);
    for (int e = 0; e < kE; ++e) {
      left.derivs[e][c] = dl[e];
      right.derivs[e][c] = dr[e];
    }
  }
  if (project) {
    for (int e = 0; e < kE; ++e) {
      left.derivs[e] = es.right * left.derivs[e];
      right.derivs[e] = es.right * right.derivs[e];
    }
  }
}

}  // namespace ader

#pragma once

// Interface Riemann solvers: the exact Godunov state for convex scalar laws,
// HLLC state sampling for Euler, and the linear characteristic Riemann problem
// used for derivative states.

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ader/equations.hpp"

namespace ader {

/// Eigenvalues with |lambda| below this are treated as stationary waves.
inline constexpr double kStationaryWaveTol = 1e-12;

/// Exact Riemann solution at x/t = 0 for Burgers' flux w^2/2.
inline double godunov_burgers(double wl, double wr) {
  if (wl > wr) {
    const double s = 0.5 * (wl + wr);
    return s >= 0.0 ? wl : wr;
  }
  if (wl > 0.0) return wl;
  if (wr < 0.0) return wr;
  return 0.0;
}

namespace detail {

// Toro's adaptive pressure estimate (PVRS, falling back to the two-rarefaction
// or two-shock approximations outside the PVRS comfort zone).
inline double star_pressure_estimate(double rhol, double ul, double pl, double al, double rhor, double ur,
                                     double pr, double ar) {
  const double pmin = std::min(pl, pr);
  const double pmax = std::max(pl, pr);
  const double rho_bar = 0.5 * (rhol + rhor);
  const double a_bar = 0.5 * (al + ar);
  const double ppv = std::max(0.0, 0.5 * (pl + pr) - 0.5 * (ur - ul) * rho_bar * a_bar);
  if (pmax / pmin <= 2.0 && ppv >= pmin && ppv <= pmax) return ppv;
  const double g = kGamma;
  if (ppv < pmin) {
    const double z = (g - 1.0) / (2.0 * g);
    const double num = al + ar - 0.5 * (g - 1.0) * (ur - ul);
    const double den = al / std::pow(pl, z) + ar / std::pow(pr, z);
    return std::pow(num / den, 1.0 / z);
  }
  const double gl = std::sqrt((2.0 / ((g + 1.0) * rhol)) / (ppv + (g - 1.0) / (g + 1.0) * pl));
  const double gr = std::sqrt((2.0 / ((g + 1.0) * rhor)) / (ppv + (g - 1.0) / (g + 1.0) * pr));
  return std::max(0.0, (gl * pl + gr * pr - (ur - ul)) / (gl + gr));
}

inline double wave_factor(double pstar, double p) {
  if (pstar <= p) return 1.0;
  return std::sqrt(1.0 + (kGamma + 1.0) / (2.0 * kGamma) * (pstar / p - 1.0));
}

}  // namespace detail

/// HLLC wave speeds for an x-direction Euler pair (index 1 is normal momentum).
struct HllcSpeeds {
  double left;
  double contact;
  double right;
};

template <int NC>
HllcSpeeds hllc_speeds(const Vec<NC>& wl, const Vec<NC>& wr) {
  static_assert(NC == 3 || NC == 4);
  const int e = NC - 1;
  auto pres = [e](const Vec<NC>& w) {
    double ke = 0.0;
    for (int k = 1; k < e; ++k) ke += w[k] * w[k];
    return (kGamma - 1.0) * (w[e] - 0.5 * ke / w[0]);
  };
  const double rhol = wl[0], rhor = wr[0];
  const double ul = wl[1] / rhol, ur = wr[1] / rhor;
  const double pl = pres(wl), pr = pres(wr);
  const double al = std::sqrt(kGamma * pl / rhol), ar = std::sqrt(kGamma * pr / rhor);
  const double pstar = detail::star_pressure_estimate(rhol, ul, pl, al, rhor, ur, pr, ar);
  const double sl = ul - al * detail::wave_factor(pstar, pl);
  const double sr = ur + ar * detail::wave_factor(pstar, pr);
  const double sstar =
      (pr - pl + rhol * ul * (sl - ul) - rhor * ur * (sr - ur)) / (rhol * (sl - ul) - rhor * (sr - ur));
  return {sl, sstar, sr};
}

/// State at x/t = 0 of the HLLC approximate Riemann fan for an x-direction
/// Euler pair. Transverse momentum (2D) is passively advected.
template <int NC>
Vec<NC> hllc_sample(const Vec<NC>& wl, const Vec<NC>& wr) {
  const HllcSpeeds s = hllc_speeds<NC>(wl, wr);
  if (!(s.left < s.right) || !std::isfinite(s.contact)) {
    std::ostringstream os;
    os << "HLLC: degenerate wave-speed estimate S_L=" << s.left << " S_R=" << s.right;
    throw PhysicsError(os.str());
  }
  if (s.left >= 0.0) return wl;
  if (s.right <= 0.0) return wr;
  const bool left_side = s.contact >= 0.0;
  const Vec<NC>& w = left_side ? wl : wr;
  const double sk = left_side ? s.left : s.right;
  const int e = NC - 1;
  const double rho = w[0];
  const double u = w[1] / rho;
  double ke = 0.0;
  for (int k = 1; k < e; ++k) ke += w[k] * w[k];
  const double p = (kGamma - 1.0) * (w[e] - 0.5 * ke / rho);
  const double factor = rho * (sk - u) / (sk - s.contact);
  Vec<NC> star;
  star[0] = factor;
  star[1] = factor * s.contact;
  if constexpr (NC == 4) star[2] = factor * w[2] / rho;
  star[e] = factor * (w[e] / rho + (s.contact - u) * (s.contact + p / (rho * (sk - u))));
  return star;
}

/// Leading-term Riemann state for each model (x direction).
inline Vec<1> riemann_state(const Burgers&, const Vec<1>& wl, const Vec<1>& wr) {
  return Vec<1>(godunov_burgers(wl[0], wr[0]));
}
inline Vec<1> riemann_state(const LinearAdvection& m, const Vec<1>& wl, const Vec<1>& wr) {
  return m.speed >= 0.0 ? wl : wr;
}
inline Vec<3> riemann_state(const Euler1D& m, const Vec<3>& wl, const Vec<3>& wr) {
  m.check_physical(wl);
  m.check_physical(wr);
  return hllc_sample<3>(wl, wr);
}
inline Vec<4> riemann_state(const Euler2D& m, const Vec<4>& wl, const Vec<4>& wr) {
  m.check_physical(wl);
  m.check_physical(wr);
  return hllc_sample<4>(wl, wr);
}

/// Solution at x/t = 0 of d_t D + A d_x D = 0 with piecewise constant data
/// (dl, dr), given the eigensystem of the constant matrix A.
template <int NC>
Vec<NC> linear_char_sample(const Eigensystem<NC>& es, const Vec<NC>& dl, const Vec<NC>& dr) {
  // Supersonic fans are fully upwind; skip the projection so the result is exact.
  if (es.values.minCoeff() > kStationaryWaveTol) return dl;
  if (es.values.maxCoeff() < -kStationaryWaveTol) return dr;
  const Vec<NC> al = es.left * dl;
  const Vec<NC> ar = es.left * dr;
  Vec<NC> alpha;
  for (int p = 0; p < NC; ++p) {
    const double lam = es.values[p];
    if (lam > kStationaryWaveTol) {
      alpha[p] = al[p];
    } else if (lam < -kStationaryWaveTol) {
      alpha[p] = ar[p];
    } else {
      alpha[p] = 0.5 * (al[p] + ar[p]);
    }
  }
  return es.right * alpha;
}

}  // namespace ader

#pragma once

// Generalized Riemann problem at a face point: leading term from a classical
// Riemann solver, derivative states from linearized Riemann problems about the
// leading term, time derivatives from the Cauchy-Kovalevskaya fill. The result
// is a degree-4 time polynomial of the interface state.

#include <array>
#include <sstream>

#include "ader/ck.hpp"
#include "ader/equations.hpp"
#include "ader/quadrature.hpp"
#include "ader/reconstruction.hpp"
#include "ader/riemann.hpp"

namespace ader {

/// W(tau) ~ a[0] + a[1] tau + ... + a[4] tau^4, a[k] = d^k W / dt^k (0+) / k!.
template <int NC>
struct TimeTaylor {
  std::array<Vec<NC>, kJetDegree + 1> a;
};

/// Horner evaluation of the interface polynomial at local time tau.
template <int NC>
Vec<NC> evaluate_taylor(const TimeTaylor<NC>& t, double tau) {
  Vec<NC> v = t.a[kJetDegree];
  for (int k = kJetDegree - 1; k >= 0; --k) v = t.a[k] + tau * v;
  return v;
}

/// Per-run call counters for the structural checks of the scheme.
struct GrpStats {
  long solves = 0;
  long eigensystems = 0;
};

namespace detail {

inline constexpr std::array<double, 5> kInvFactorial{1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0};

}  // namespace detail

/// One-dimensional GRP from the two face traces.
template <class Model>
TimeTaylor<Model::kComps> grp_time_taylor(const Model& model, const FaceTrace1D<Model::kComps>& left,
                                          const FaceTrace1D<Model::kComps>& right, GrpStats* stats = nullptr) {
  static_assert(Model::kDim == 1);
  constexpr int NC = Model::kComps;
  using L = JetLayout<1>;
  const Vec<NC> lead = riemann_state(model, left.derivs[0], right.derivs[0]);
  const Eigensystem<NC> es = model.eigensystem(lead);
  if (stats) {
    ++stats->solves;
    ++stats->eigensystems;
  }
  ModelJet<Model> jet;
  for (int c = 0; c < NC; ++c) jet[c][0] = lead[c];
  for (int k = 1; k <= kJetDegree; ++k) {
    const Vec<NC> d = linear_char_sample(es, left.derivs[k], right.derivs[k]);
    const int i = L::index(k, 0, 0);
    for (int c = 0; c < NC; ++c) jet[c][i] = d[c] * detail::kInvFactorial[k];
  }
  ck_fill(model, jet);
  TimeTaylor<NC> out;
  for (int k = 0; k <= kJetDegree; ++k) {
    const int i = L::index(0, 0, k);
    for (int c = 0; c < NC; ++c) out.a[k][c] = jet[c][i];
  }
  return out;
}

/// Two-dimensional GRP along x at one face point. Derivatives with a normal
/// component (m >= 1) are upwinded by the x-direction linear Riemann problem;
/// purely transverse ones (m = 0) take the mean of the two traces.
template <class Model>
TimeTaylor<Model::kComps> grp_time_taylor(const Model& model, const FaceTrace2D<Model::kComps>& left,
                                          const FaceTrace2D<Model::kComps>& right, GrpStats* stats = nullptr) {
  static_assert(Model::kDim == 2);
  constexpr int NC = Model::kComps;
  using L = JetLayout<2>;
  const Vec<NC> lead = riemann_state(model, left.at(0, 0), right.at(0, 0));
  const Eigensystem<NC> es = model.eigensystem(lead);
  if (stats) {
    ++stats->solves;
    ++stats->eigensystems;
  }
  ModelJet<Model> jet;
  for (int c = 0; c < NC; ++c) jet[c][0] = lead[c];
  for (int e = 1; e < L::kSpatialSize; ++e) {
    const auto& mono = L::monomials[e];
    const Vec<NC> d = mono.x >= 1 ? linear_char_sample(es, left.derivs[e], right.derivs[e])
                                  : Vec<NC>(0.5 * (left.derivs[e] + right.derivs[e]));
    const double scale = detail::kInvFactorial[mono.x] * detail::kInvFactorial[mono.y];
    for (int c = 0; c < NC; ++c) jet[c][e] = d[c] * scale;
  }
  ck_fill(model, jet);
  TimeTaylor<NC> out;
  for (int k = 0; k <= kJetDegree; ++k) {
    const int i = L::index(0, 0, k);
    for (int c = 0; c < NC; ++c) out.a[k][c] = jet[c][i];
  }
  return out;
}

/// Time-averaged flux over one step with the interface states at every node.
template <int NC>
struct FluxAverage {
  Vec<NC> flux;
  std::array<Vec<NC>, QuadratureRule::kMaxNodes> states;
  int count = 0;
};

template <class Model>
FluxAverage<Model::kComps> time_average_flux(const Model& model, const TimeTaylor<Model::kComps>& taylor,
                                             double dt, const QuadratureRule& rule) {
  constexpr int NC = Model::kComps;
  FluxAverage<NC> out;
  out.count = rule.count;
  out.flux.setZero();
  for (int q = 0; q < rule.count; ++q) {
    out.states[q] = evaluate_taylor(taylor, rule.nodes[q] * dt);
    if (!model.is_physical(out.states[q])) {
      std::ostringstream os;
      os << model.name() << ": non-physical interface state at time node " << q << " (tau=" << rule.nodes[q] * dt
         << ")";
      throw PhysicsError(os.str());
    }
    out.flux += rule.weights[q] * model.flux(out.states[q]);
  }
  return out;
}

}  // namespace ader

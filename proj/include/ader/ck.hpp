#pragma once

// Cauchy-Kovalevskaya (Lax-Wendroff) fill: given the purely spatial Taylor
// coefficients of W at a point, produce every time coefficient up to total
// degree 4 from W_t = -F(W)_x - G(W)_y, evaluated in truncated jet arithmetic.

#include "ader/equations.hpp"
#include "ader/jets.hpp"

namespace ader {

template <class Model>
using ModelJet = JetState<Model::kDim, Model::kComps>;

/// Fills all coefficients with time order >= 1. Coefficients with time order 0
/// are read; the rest of the input is ignored and overwritten.
template <class Model>
void ck_fill(const Model& model, ModelJet<Model>& w) {
  constexpr int Dim = Model::kDim;
  constexpr int NC = Model::kComps;
  using L = JetLayout<Dim>;

  typename Model::State base;
  for (int c = 0; c < NC; ++c) base[c] = w[c][0];
  model.check_physical(base);

  typename Model::template JetWork<Dim> work;
  JetState<Dim, NC> f;
  JetState<Dim, NC> g;
  for (int k = 0; k < kJetDegree; ++k) {
    if constexpr (Dim == 1) {
      model.flux_jet_slice(w, work, k, f);
    } else {
      model.flux_jet_slice(w, work, k, f, g);
    }
    const double inv = 1.0 / (k + 1);
    for (int i = L::slice_start[k + 1]; i < L::slice_start[k + 2]; ++i) {
      const auto& m = L::monomials[i];
      const int ix = L::index(m.x + 1, m.y, k);
      for (int c = 0; c < NC; ++c) {
        double rate = (m.x + 1) * f[c][ix];
        if constexpr (Dim == 2) rate += (m.y + 1) * g[c][L::index(m.x, m.y + 1, k)];
        w[c][i] = -rate * inv;
      }
    }
  }
}

}  // namespace ader

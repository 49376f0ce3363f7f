#pragma once

#include <array>
#include <vector>

namespace ader {

/// Quadrature rule on [0, 1] with weights summing to one.
struct QuadratureRule {
  static constexpr int kMaxNodes = 8;
  int count = 0;
  std::array<double, kMaxNodes> nodes{};
  std::array<double, kMaxNodes> weights{};

  bool ends_at_one() const { return count > 0 && nodes[count - 1] == 1.0; }
};

/// Four-point Gauss-Lobatto rule (nodes include both end points). Weights are
/// obtained from the moment conditions for degrees 0..3; the rule is then exact
/// up to degree 5.
QuadratureRule gauss_lobatto_4();

/// n-point Gauss-Legendre rule mapped to [0, 1].
QuadratureRule gauss_legendre_rule(int n);

/// Gauss-Legendre nodes and weights of arbitrary size on [-1/2, 1/2], weights
/// summing to one. Used for exact cell averaging.
struct LineRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
LineRule gauss_legendre_centered(int n);

/// Three-point Gauss-Legendre rule on [-1/2, 1/2] for face line integrals.
struct FaceGauss {
  static constexpr int kPoints = 3;
  static constexpr std::array<double, 3> weights{5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0};
  static const std::array<double, 3> nodes;
};

}  // namespace ader

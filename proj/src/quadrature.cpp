#include "ader/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace ader {

const std::array<double, 3> FaceGauss::nodes{-0.5 * std::sqrt(0.6), 0.0, 0.5 * std::sqrt(0.6)};

QuadratureRule gauss_lobatto_4() {
  QuadratureRule rule;
  rule.count = 4;
  const double s = 1.0 / std::sqrt(5.0);
  rule.nodes = {0.0, 0.5 * (1.0 - s), 0.5 * (1.0 + s), 1.0};
  Eigen::Matrix4d v;
  Eigen::Vector4d moments;
  for (int m = 0; m < 4; ++m) {
    for (int i = 0; i < 4; ++i) v(m, i) = std::pow(rule.nodes[i], m);
    moments[m] = 1.0 / (m + 1);
  }
  const Eigen::Vector4d w = v.fullPivLu().solve(moments);
  for (int i = 0; i < 4; ++i) rule.weights[i] = w[i];
  return rule;
}

LineRule gauss_legendre_centered(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  LineRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton on P_n starting from the Chebyshev-like guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // nodes ascending on [-1/2, 1/2]
    rule.nodes[n - 1 - i] = 0.5 * x;
    rule.weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

QuadratureRule gauss_legendre_rule(int n) {
  if (n < 1 || n > QuadratureRule::kMaxNodes) throw std::invalid_argument("gauss_legendre_rule: bad size");
  const LineRule line = gauss_legendre_centered(n);
  QuadratureRule rule;
  rule.count = n;
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = line.nodes[i] + 0.5;
    rule.weights[i] = line.weights[i];
  }
  return rule;
}

}  // namespace ader

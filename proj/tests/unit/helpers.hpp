#pragma once

#include <cmath>
#include <random>

#include "ader/equations.hpp"

namespace testing_support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

inline ader::Vec<3> random_euler1d() {
  return ader::Euler1D{}.to_conserved(ader::Vec<3>(uniform(0.1, 5.0), uniform(-3.0, 3.0), uniform(0.1, 10.0)));
}

inline ader::Vec<4> random_euler2d() {
  return ader::Euler2D{}.to_conserved(
      ader::Vec<4>(uniform(0.1, 5.0), uniform(-3.0, 3.0), uniform(-3.0, 3.0), uniform(0.1, 10.0)));
}

template <class M>
double max_abs(const M& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace testing_support

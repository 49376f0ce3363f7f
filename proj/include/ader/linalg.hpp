#pragma once

#include <Eigen/Core>

namespace ader {

template <int N>
using Vec = Eigen::Matrix<double, N, 1>;

template <int N>
using Mat = Eigen::Matrix<double, N, N>;

enum class Axis { x = 0, y = 1 };

}  // namespace ader

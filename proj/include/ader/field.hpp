#pragma once

#include <cassert>
#include <vector>

#include "ader/linalg.hpp"

namespace ader {

/// Ghost layers on each side of every grid.
inline constexpr int kGhost = 2;

struct Grid1D {
  int n = 0;
  double x0 = 0.0;
  double x1 = 1.0;

  double dx() const { return (x1 - x0) / n; }
  double center(int i) const { return x0 + (i + 0.5) * dx(); }
  /// Face f separates cells f-1 and f.
  double face(int f) const { return x0 + f * dx(); }
};

/// Cell averages of W and W_x on a 1D grid, including ghost cells.
template <int NC>
struct Field1D {
  using State = Vec<NC>;

  Grid1D grid;
  std::vector<State> wbar;
  std::vector<State> vbar;
  double time = 0.0;

  Field1D() = default;
  explicit Field1D(const Grid1D& g)
      : grid(g), wbar(g.n + 2 * kGhost, State::Zero()), vbar(g.n + 2 * kGhost, State::Zero()) {}

  int size() const { return grid.n; }
  State& w(int i) { return wbar[i + kGhost]; }
  const State& w(int i) const { return wbar[i + kGhost]; }
  State& v(int i) { return vbar[i + kGhost]; }
  const State& v(int i) const { return vbar[i + kGhost]; }
};

struct Grid2D {
  int nx = 0;
  int ny = 0;
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;

  double dx() const { return (x1 - x0) / nx; }
  double dy() const { return (y1 - y0) / ny; }
  double xc(int i) const { return x0 + (i + 0.5) * dx(); }
  double yc(int j) const { return y0 + (j + 0.5) * dy(); }
  double xf(int f) const { return x0 + f * dx(); }
  double yf(int f) const { return y0 + f * dy(); }
};

/// Cell averages of W, W_x, W_y and W_xy on a 2D grid, including ghost cells.
/// Storage is row-major with i fastest.
template <int NC>
struct Field2D {
  using State = Vec<NC>;

  Grid2D grid;
  std::vector<State> wbar, vbar, ybar, zbar;
  double time = 0.0;

  Field2D() = default;
  explicit Field2D(const Grid2D& g) : grid(g) {
    const std::size_t n = static_cast<std::size_t>(g.nx + 2 * kGhost) * (g.ny + 2 * kGhost);
    wbar.assign(n, State::Zero());
    vbar.assign(n, State::Zero());
    ybar.assign(n, State::Zero());
    zbar.assign(n, State::Zero());
  }

  std::size_t index(int i, int j) const {
    assert(i >= -kGhost && i < grid.nx + kGhost && j >= -kGhost && j < grid.ny + kGhost);
    return static_cast<std::size_t>(j + kGhost) * (grid.nx + 2 * kGhost) + (i + kGhost);
  }

  State& w(int i, int j) { return wbar[index(i, j)]; }
  const State& w(int i, int j) const { return wbar[index(i, j)]; }
  State& v(int i, int j) { return vbar[index(i, j)]; }
  const State& v(int i, int j) const { return vbar[index(i, j)]; }
  State& y(int i, int j) { return ybar[index(i, j)]; }
  const State& y(int i, int j) const { return ybar[index(i, j)]; }
  State& z(int i, int j) { return zbar[index(i, j)]; }
  const State& z(int i, int j) const { return zbar[index(i, j)]; }
};

}  // namespace ader

#pragma once

// Ghost-cell boundary conditions for the four average fields.

#include <functional>
#include <limits>
#include <string>
#include <tuple>

#include "ader/error.hpp"
#include "ader/field.hpp"
#include "ader/quadrature.hpp"

namespace ader {

enum class BoundaryKind { periodic, transmissive, reflective, dirichlet };

inline std::string to_string(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::periodic: return "periodic";
    case BoundaryKind::transmissive: return "transmissive";
    case BoundaryKind::reflective: return "reflective";
    case BoundaryKind::dirichlet: return "dirichlet";
  }
  return "unknown";
}

/// Index of the momentum component normal to a wall, or -1 for scalar models.
template <class Model>
constexpr int normal_momentum_index(Axis axis) {
  if constexpr (Model::kSystem) {
    return axis == Axis::x ? 1 : 2;
  } else {
    return -1;
  }
}

//------------------------------------------------------------------------------
// 1D

template <int NC>
struct Profile1D {
  /// Mean of the prescribed state over [xa, xb] at time t.
  std::function<Vec<NC>(double xa, double xb, double t)> average;
  /// Prescribed point value.
  std::function<Vec<NC>(double x, double t)> point;
};

template <int NC>
struct Side1D {
  BoundaryKind kind = BoundaryKind::transmissive;
  Profile1D<NC> profile;
};

template <int NC>
struct BoundarySpec1D {
  Side1D<NC> left;
  Side1D<NC> right;

  void validate() const {
    if ((left.kind == BoundaryKind::periodic) != (right.kind == BoundaryKind::periodic))
      throw ConfigError("periodic boundaries must be paired: left and right sides disagree");
    for (const auto* s : {&left, &right}) {
      if (s->kind == BoundaryKind::dirichlet && (!s->profile.average || !s->profile.point))
        throw ConfigError("dirichlet boundary without a prescribed profile");
    }
  }
};

namespace detail {

template <int NC>
Vec<NC> reflect(const Vec<NC>& w, int k) {
  Vec<NC> r = w;
  if (k >= 0) r[k] = -r[k];
  return r;
}

}  // namespace detail

template <class Model>
void apply_boundary(const Model&, Field1D<Model::kComps>& f, const BoundarySpec1D<Model::kComps>& spec) {
  const int n = f.size();
  const double dx = f.grid.dx();
  const double t = f.time;
  const int mom = normal_momentum_index<Model>(Axis::x);
  auto fill = [&](const Side1D<Model::kComps>& side, int ghost, int mirror, int wrap, int nearest) {
    switch (side.kind) {
      case BoundaryKind::periodic:
        f.w(ghost) = f.w(wrap);
        f.v(ghost) = f.v(wrap);
        break;
      case BoundaryKind::transmissive:
        f.w(ghost) = f.w(nearest);
        f.v(ghost) = f.v(nearest);
        break;
      case BoundaryKind::reflective:
        f.w(ghost) = detail::reflect(f.w(mirror), mom);
        f.v(ghost) = -detail::reflect(f.v(mirror), mom);
        break;
      case BoundaryKind::dirichlet: {
        const double xa = f.grid.face(ghost);
        const double xb = xa + dx;
        f.w(ghost) = side.profile.average(xa, xb, t);
        f.v(ghost) = (side.profile.point(xb, t) - side.profile.point(xa, t)) / dx;
        break;
      }
    }
  };
  for (int g = 1; g <= kGhost; ++g) {
    fill(spec.left, -g, g - 1, n - g, 0);
    fill(spec.right, n - 1 + g, n - g, g - 1, n - 1);
  }
}

//------------------------------------------------------------------------------
// 2D

template <int NC>
struct Profile2D {
  /// Mean over the box [xa, xb] x [ya, yb] at time t.
  std::function<Vec<NC>(double xa, double xb, double ya, double yb, double t)> average;
  std::function<Vec<NC>(double x, double y, double t)> point;
};

/// One side of a rectangle. A side may switch kind at a coordinate along it:
/// cells whose centre lies below `split` use `kind`, the others `kind_beyond`.
template <int NC>
struct Side2D {
  BoundaryKind kind = BoundaryKind::transmissive;
  Profile2D<NC> profile;
  double split = std::numeric_limits<double>::infinity();
  BoundaryKind kind_beyond = BoundaryKind::transmissive;
  Profile2D<NC> profile_beyond;

  bool segmented() const { return split != std::numeric_limits<double>::infinity(); }
  BoundaryKind kind_at(double s) const { return s < split ? kind : kind_beyond; }
  const Profile2D<NC>& profile_at(double s) const { return s < split ? profile : profile_beyond; }
};

template <int NC>
struct BoundarySpec2D {
  Side2D<NC> left, right, bottom, top;

  void validate() const {
    auto periodic_any = [](const Side2D<NC>& s) {
      return s.kind == BoundaryKind::periodic || (s.segmented() && s.kind_beyond == BoundaryKind::periodic);
    };
    auto periodic_all = [](const Side2D<NC>& s) {
      return s.kind == BoundaryKind::periodic && (!s.segmented() || s.kind_beyond == BoundaryKind::periodic);
    };
    for (auto [a, b, label] : {std::tuple{&left, &right, "left/right"}, std::tuple{&bottom, &top, "bottom/top"}}) {
      if (periodic_any(*a) != periodic_any(*b) || periodic_any(*a) != periodic_all(*a) ||
          periodic_any(*b) != periodic_all(*b))
        throw ConfigError(std::string("periodic boundaries must be paired over whole sides: ") + label);
    }
    for (const auto* s : {&left, &right, &bottom, &top}) {
      auto check = [](BoundaryKind k, const Profile2D<NC>& p) {
        if (k == BoundaryKind::dirichlet && (!p.average || !p.point))
          throw ConfigError("dirichlet boundary without a prescribed profile");
      };
      check(s->kind, s->profile);
      if (s->segmented()) check(s->kind_beyond, s->profile_beyond);
    }
  }
};

namespace detail {

// Dirichlet ghost cell from a prescribed profile: box average plus the
// derivative averages from point differences (Gauss line rules along edges).
template <int NC>
void dirichlet_cell(Field2D<NC>& f, int i, int j, const Profile2D<NC>& p) {
  const auto& g = f.grid;
  const double xa = g.xf(i), xb = g.xf(i + 1);
  const double ya = g.yf(j), yb = g.yf(j + 1);
  const double t = f.time;
  const double dx = g.dx(), dy = g.dy();
  f.w(i, j) = p.average(xa, xb, ya, yb, t);
  Vec<NC> vx = Vec<NC>::Zero();
  Vec<NC> vy = Vec<NC>::Zero();
  for (int q = 0; q < 3; ++q) {
    const double wq = FaceGauss::weights[q];
    const double yq = g.yc(j) + FaceGauss::nodes[q] * dy;
    const double xq = g.xc(i) + FaceGauss::nodes[q] * dx;
    vx += wq * (p.point(xb, yq, t) - p.point(xa, yq, t));
    vy += wq * (p.point(xq, yb, t) - p.point(xq, ya, t));
  }
  f.v(i, j) = vx / dx;
  f.y(i, j) = vy / dy;
  f.z(i, j) = (p.point(xb, yb, t) - p.point(xa, yb, t) - p.point(xb, ya, t) + p.point(xa, ya, t)) / (dx * dy);
}

}  // namespace detail

/// Fills ghost cells: x sides on interior rows, then y sides over all columns
/// (so the corner ghost blocks are filled from x-ghosts).
template <class Model>
void apply_boundary(const Model&, Field2D<Model::kComps>& f, const BoundarySpec2D<Model::kComps>& spec) {
  constexpr int NC = Model::kComps;
  const int nx = f.grid.nx;
  const int ny = f.grid.ny;
  const int mx = normal_momentum_index<Model>(Axis::x);
  const int my = normal_momentum_index<Model>(Axis::y);

  auto copy = [&f](int i, int j, int si, int sj) {
    f.w(i, j) = f.w(si, sj);
    f.v(i, j) = f.v(si, sj);
    f.y(i, j) = f.y(si, sj);
    f.z(i, j) = f.z(si, sj);
  };
  // Mirror across an x-wall (normal along x): W_x and W_xy change parity.
  auto mirror_x = [&](int i, int j, int si) {
    f.w(i, j) = detail::reflect(f.w(si, j), mx);
    f.v(i, j) = -detail::reflect(f.v(si, j), mx);
    f.y(i, j) = detail::reflect(f.y(si, j), mx);
    f.z(i, j) = -detail::reflect(f.z(si, j), mx);
  };
  auto mirror_y = [&](int i, int j, int sj) {
    f.w(i, j) = detail::reflect(f.w(i, sj), my);
    f.v(i, j) = detail::reflect(f.v(i, sj), my);
    f.y(i, j) = -detail::reflect(f.y(i, sj), my);
    f.z(i, j) = -detail::reflect(f.z(i, sj), my);
  };

  for (int j = 0; j < ny; ++j) {
    const double s = f.grid.yc(j);
    for (int g = 1; g <= kGhost; ++g) {
      const int il = -g, ir = nx - 1 + g;
      switch (spec.left.kind_at(s)) {
        case BoundaryKind::periodic: copy(il, j, nx - g, j); break;
        case BoundaryKind::transmissive: copy(il, j, 0, j); break;
        case BoundaryKind::reflective: mirror_x(il, j, g - 1); break;
        case BoundaryKind::dirichlet: detail::dirichlet_cell<NC>(f, il, j, spec.left.profile_at(s)); break;
      }
      switch (spec.right.kind_at(s)) {
        case BoundaryKind::periodic: copy(ir, j, g - 1, j); break;
        case BoundaryKind::transmissive: copy(ir, j, nx - 1, j); break;
        case BoundaryKind::reflective: mirror_x(ir, j, nx - g); break;
        case BoundaryKind::dirichlet: detail::dirichlet_cell<NC>(f, ir, j, spec.right.profile_at(s)); break;
      }
    }
  }
  for (int i = -kGhost; i < nx + kGhost; ++i) {
    const double s = f.grid.xc(i);
    for (int g = 1; g <= kGhost; ++g) {
      const int jb = -g, jt = ny - 1 + g;
      switch (spec.bottom.kind_at(s)) {
        case BoundaryKind::periodic: copy(i, jb, i, ny - g); break;
        case BoundaryKind::transmissive: copy(i, jb, i, 0); break;
        case BoundaryKind::reflective: mirror_y(i, jb, g - 1); break;
        case BoundaryKind::dirichlet: detail::dirichlet_cell<NC>(f, i, jb, spec.bottom.profile_at(s)); break;
      }
      switch (spec.top.kind_at(s)) {
        case BoundaryKind::periodic: copy(i, jt, i, g - 1); break;
        case BoundaryKind::transmissive: copy(i, jt, i, ny - 1); break;
        case BoundaryKind::reflective: mirror_y(i, jt, ny - g); break;
        case BoundaryKind::dirichlet: detail::dirichlet_cell<NC>(f, i, jt, spec.top.profile_at(s)); break;
      }
    }
  }
}

}  // namespace ader

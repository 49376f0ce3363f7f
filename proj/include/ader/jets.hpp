#pragma once

// Truncated multivariate Taylor series ("jets") in (x, t) or (x, y, t) up to
// total degree 4. Coefficients are stored in normalized form, c[a] = d^a W / a!,
// so products are plain Cauchy convolutions.
//
// Monomials are ordered by time order first and total degree second. Every
// operation can be evaluated one time-order slice at a time: slice k of a
// product or quotient only reads slices <= k of its operands, which is what the
// Cauchy-Kovalevskaya fill relies on.

#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace ader {

inline constexpr int kJetDegree = 4;

template <int Dim>
struct JetLayout {
  static_assert(Dim == 1 || Dim == 2, "jets are defined in one or two space dimensions");

  struct Monomial {
    int x = 0;
    int y = 0;
    int t = 0;
    constexpr int degree() const { return x + y + t; }
  };

  struct Pair {
    std::uint8_t lhs;
    std::uint8_t rhs;
  };

  static constexpr int kSize = Dim == 1 ? 15 : 35;
  static constexpr int kPairs = Dim == 1 ? 70 : 210;
  // Number of purely spatial monomials (t-order 0).
  static constexpr int kSpatialSize = Dim == 1 ? 5 : 15;

  static constexpr std::array<Monomial, kSize> make_monomials() {
    std::array<Monomial, kSize> out{};
    int n = 0;
    for (int t = 0; t <= kJetDegree; ++t) {
      for (int deg = t; deg <= kJetDegree; ++deg) {
        const int spatial = deg - t;
        for (int x = spatial; x >= 0; --x) {
          const int y = spatial - x;
          if (Dim == 1 && y != 0) continue;
          out[n++] = Monomial{x, y, t};
        }
      }
    }
    return out;
  }

  static constexpr std::array<Monomial, kSize> monomials = make_monomials();

  static constexpr std::array<std::array<std::array<std::int8_t, 5>, 5>, 5> make_lookup() {
    std::array<std::array<std::array<std::int8_t, 5>, 5>, 5> table{};
    for (auto& a : table)
      for (auto& b : a)
        for (auto& c : b) c = -1;
    for (int i = 0; i < kSize; ++i) {
      const auto& m = monomials[i];
      table[m.x][m.y][m.t] = static_cast<std::int8_t>(i);
    }
    return table;
  }

  static constexpr auto lookup = make_lookup();

  /// Index of x^a y^b t^k, or -1 when the monomial is outside the jet.
  static constexpr int index(int a, int b, int k) {
    if (a < 0 || b < 0 || k < 0 || a + b + k > kJetDegree) return -1;
    return lookup[a][b][k];
  }

  static constexpr std::array<int, kJetDegree + 2> make_slice_start() {
    std::array<int, kJetDegree + 2> start{};
    int t = 0;
    for (int i = 0; i < kSize; ++i) {
      while (monomials[i].t >= t) start[t++] = i;
    }
    while (t <= kJetDegree + 1) start[t++] = kSize;
    return start;
  }

  /// Monomials with time order k occupy [slice_start[k], slice_start[k+1]).
  static constexpr auto slice_start = make_slice_start();

  static constexpr std::array<int, kSize + 1> make_pair_offsets() {
    std::array<int, kSize + 1> off{};
    int n = 0;
    for (int i = 0; i < kSize; ++i) {
      off[i] = n;
      const auto& a = monomials[i];
      for (int j = 0; j < kSize; ++j) {
        const auto& b = monomials[j];
        if (b.x <= a.x && b.y <= a.y && b.t <= a.t) ++n;
      }
    }
    off[kSize] = n;
    return off;
  }

  static constexpr auto pair_offsets = make_pair_offsets();

  // For each monomial a, all (b, a - b) index pairs; the first entry of each
  // list is always (0, a).
  static constexpr std::array<Pair, kPairs> make_pairs() {
    std::array<Pair, kPairs> out{};
    int n = 0;
    for (int i = 0; i < kSize; ++i) {
      const auto& a = monomials[i];
      for (int j = 0; j < kSize; ++j) {
        const auto& b = monomials[j];
        if (b.x <= a.x && b.y <= a.y && b.t <= a.t) {
          out[n++] = Pair{static_cast<std::uint8_t>(j),
                          static_cast<std::uint8_t>(index(a.x - b.x, a.y - b.y, a.t - b.t))};
        }
      }
    }
    return out;
  }

  static constexpr auto pairs = make_pairs();

  static_assert(make_pair_offsets()[kSize] == kPairs);
};

template <int Dim>
class Jet {
 public:
  using Layout = JetLayout<Dim>;
  static constexpr int kSize = Layout::kSize;

  Jet() { c_.fill(0.0); }
  explicit Jet(double constant) {
    c_.fill(0.0);
    c_[0] = constant;
  }

  double& operator[](int i) { return c_[i]; }
  double operator[](int i) const { return c_[i]; }

  /// Coefficient of x^a y^b t^k (normalized Taylor form). Out-of-range
  /// monomials read as zero.
  double coeff(int a, int b, int k) const {
    const int i = Layout::index(a, b, k);
    return i < 0 ? 0.0 : c_[i];
  }
  void set(int a, int b, int k, double value) {
    const int i = Layout::index(a, b, k);
    assert(i >= 0);
    c_[i] = value;
  }

  double constant() const { return c_[0]; }
  const std::array<double, kSize>& data() const { return c_; }

  Jet& operator+=(const Jet& o) {
    for (int i = 0; i < kSize; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int i = 0; i < kSize; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet& operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

 private:
  std::array<double, kSize> c_;
};

// Slice kernels. `slice` is the time order being produced.

template <int Dim>
inline void mul_slice(Jet<Dim>& out, const Jet<Dim>& a, const Jet<Dim>& b, int slice) {
  using L = JetLayout<Dim>;
  for (int i = L::slice_start[slice]; i < L::slice_start[slice + 1]; ++i) {
    double s = 0.0;
    for (int p = L::pair_offsets[i]; p < L::pair_offsets[i + 1]; ++p) {
      s += a[L::pairs[p].lhs] * b[L::pairs[p].rhs];
    }
    out[i] = s;
  }
}

// out = a / b by back-substitution: b * out = a. `out` must not alias a or b.
template <int Dim>
inline void div_slice(Jet<Dim>& out, const Jet<Dim>& a, const Jet<Dim>& b, int slice) {
  using L = JetLayout<Dim>;
  const double inv = 1.0 / b[0];
  for (int i = L::slice_start[slice]; i < L::slice_start[slice + 1]; ++i) {
    double s = a[i];
    // Skip the leading (0, i) pair; it holds the unknown itself.
    for (int p = L::pair_offsets[i] + 1; p < L::pair_offsets[i + 1]; ++p) {
      s -= b[L::pairs[p].lhs] * out[L::pairs[p].rhs];
    }
    out[i] = s * inv;
  }
}

template <int Dim>
inline void check_divisor(const Jet<Dim>& b) {
  if (!(std::abs(b[0]) > 1e-300)) {
    throw std::domain_error("jet division by a jet with zero constant term");
  }
}

template <int Dim>
Jet<Dim> operator+(Jet<Dim> a, const Jet<Dim>& b) {
  return a += b;
}
template <int Dim>
Jet<Dim> operator-(Jet<Dim> a, const Jet<Dim>& b) {
  return a -= b;
}
template <int Dim>
Jet<Dim> operator*(Jet<Dim> a, double s) {
  return a *= s;
}
template <int Dim>
Jet<Dim> operator*(double s, Jet<Dim> a) {
  return a *= s;
}
template <int Dim>
Jet<Dim> operator*(const Jet<Dim>& a, const Jet<Dim>& b) {
  Jet<Dim> out;
  for (int k = 0; k <= kJetDegree; ++k) mul_slice(out, a, b, k);
  return out;
}
template <int Dim>
Jet<Dim> operator/(const Jet<Dim>& a, const Jet<Dim>& b) {
  check_divisor(b);
  Jet<Dim> out;
  for (int k = 0; k <= kJetDegree; ++k) div_slice(out, a, b, k);
  return out;
}

template <int Dim, int NC>
using JetState = std::array<Jet<Dim>, NC>;

}  // namespace ader

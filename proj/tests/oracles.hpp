#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: characteristic-polynomial eigenvalues via Faddeev-LeVerrier +
// Durand-Kerner, finite-difference derivative stencils, and deterministic
// random generators.

#include <array>
#include <complex>
#include <random>

#include "procaflow/minkowski.hpp"

namespace oracles {

using procaflow::AntisymR;
using procaflow::cplx;
using procaflow::CVec4;
using procaflow::Mat4;
using procaflow::Vec4;

using Rng = std::mt19937_64;

inline Vec4 rand_vec(Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  return {n(rng), n(rng), n(rng), n(rng)};
}

inline AntisymR rand_antisym(Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  AntisymR g;
  for (int i = 0; i < 6; ++i) g.c[i] = n(rng);
  return g;
}

inline Mat4 rand_mat(Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = n(rng);
  return m;
}

// Characteristic polynomial coefficients of a 4x4 matrix:
// p(x) = x^4 + c3 x^3 + c2 x^2 + c1 x + c0 (Faddeev-LeVerrier).
inline std::array<double, 4> charpoly(const Mat4& a) {
  Mat4 m = a;
  std::array<double, 4> c{};
  double coeff = 0;
  Mat4 prev;
  for (int k = 1; k <= 4; ++k) {
    if (k > 1) {
      // m = a * (prev + coeff * I)
      Mat4 t = prev;
      for (int i = 0; i < 4; ++i) t(i, i) += coeff;
      m = a * t;
    }
    double tr = 0;
    for (int i = 0; i < 4; ++i) tr += m(i, i);
    coeff = -tr / k;
    c[4 - k] = coeff;
    prev = m;
  }
  return c;  // c[3] x^3 + c[2] x^2 + c[1] x + c[0]
}

// All four roots of x^4 + c3 x^3 + c2 x^2 + c1 x + c0 by Durand-Kerner.
inline std::array<cplx, 4> quartic_roots(const std::array<double, 4>& c) {
  std::array<cplx, 4> r{cplx{0.4, 0.9}, cplx{-0.91, 0.6}, cplx{0.2, -1.1}, cplx{-0.5, -0.7}};
  // scale start radius by a coefficient bound
  double bound = 1.0;
  for (double ci : c) bound = std::max(bound, std::abs(ci));
  for (auto& x : r) x *= (1.0 + bound);
  auto p = [&](cplx x) {
    return (((x + c[3]) * x + c[2]) * x + c[1]) * x + c[0];
  };
  for (int it = 0; it < 500; ++it) {
    double worst = 0;
    for (int i = 0; i < 4; ++i) {
      cplx denom{1, 0};
      for (int j = 0; j < 4; ++j)
        if (j != i) denom *= (r[i] - r[j]);
      const cplx delta = p(r[i]) / denom;
      r[i] -= delta;
      worst = std::max(worst, std::abs(delta));
    }
    if (worst < 1e-14 * (1.0 + bound)) break;
  }
  return r;
}

inline std::array<cplx, 4> eig_oracle(const Mat4& a) { return quartic_roots(charpoly(a)); }

}  // namespace oracles

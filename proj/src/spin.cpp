#include "procaflow/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace procaflow {

namespace {

GeneratorSet make_generators() {
  GeneratorSet g{};
  g.M[0](2, 3) = -1;
  g.M[0](3, 2) = 1;
  g.M[1](1, 3) = 1;
  g.M[1](3, 1) = -1;
  g.M[2](1, 2) = -1;
  g.M[2](2, 1) = 1;
  g.N[0](0, 1) = 1;
  g.N[0](1, 0) = 1;
  g.N[1](0, 2) = 1;
  g.N[1](2, 0) = 1;
  g.N[2](0, 3) = 1;
  g.N[2](3, 0) = 1;
  return g;
}

CMat4 cm(const Mat4& a, cplx s) {
  CMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = s * a(i, j);
  return r;
}

CMat4 add(const CMat4& a, const CMat4& b) {
  CMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

constexpr double kSpatialTol = 1e-12;

CVec4 unit_hermitian(const CVec4& v) {
  const double n = euclid_norm(v);
  if (n == 0) return v;
  return (cplx{1.0 / n, 0.0}) * v;
}

SpinMode make_mode_entry(cplx lam, CVec4 eps, SpinKind kind, bool degen = false) {
  SpinMode m;
  m.eigenvalue = lam;
  m.polarization = eps;
  m.unit_polarization = unit_hermitian(eps);
  m.kind = kind;
  m.degenerate_parametrization = degen;
  return m;
}

}  // namespace

const GeneratorSet& generators() {
  static const GeneratorSet g = make_generators();
  return g;
}

PauliLubanski pauli_lubanski(const Vec4& k) {
  const double k2 = minkowski_dot(k, k);
  if (!(k2 > 0) || !(k[0] > 0)) {
    throw std::invalid_argument("pauli_lubanski: k must be future-pointing time-like");
  }
  const GeneratorSet& g = generators();
  // covariant momentum components on e^{-ik.x}
  const Vec4 p = lower(k);
  const cplx I{0, 1};
  PauliLubanski pl;
  pl.k = k;
  pl.mass = std::sqrt(k2);
  pl.W[0] = add(add(cm(g.M[0], I * p[1]), cm(g.M[1], I * p[2])), cm(g.M[2], I * p[3]));
  pl.W[1] = add(cm(g.M[0], I * p[0]), add(cm(g.N[2], I * p[2]), cm(g.N[1], -I * p[3])));
  pl.W[2] = add(cm(g.M[1], I * p[0]), add(cm(g.N[0], I * p[3]), cm(g.N[2], -I * p[1])));
  pl.W[3] = add(cm(g.M[2], I * p[0]), add(cm(g.N[1], I * p[1]), cm(g.N[0], -I * p[2])));
  return pl;
}

std::string to_string(SpinKind k) {
  switch (k) {
    case SpinKind::longitudinal: return "longitudinal";
    case SpinKind::circular_plus: return "circular+";
    case SpinKind::circular_minus: return "circular-";
    case SpinKind::transverse: return "transverse";
    case SpinKind::zero: return "zero";
  }
  return "?";
}

std::vector<SpinMode> eigenmodes_w3(const Vec4& k) {
  const double k2 = minkowski_dot(k, k);
  if (!(k2 > 0) || !(k[0] > 0)) {
    throw std::invalid_argument("eigenmodes_w3: k must be future-pointing time-like");
  }
  const double m2 = k2;
  const double k0 = k[0], k1 = k[1], k2s = k[2], k3 = k[3];
  const double lam = std::sqrt(k0 * k0 - k1 * k1 - k2s * k2s);
  std::vector<SpinMode> out;

  // lambda = 0 (longitudinal): spatial part along k, time part k0, last
  // component fixed by k.eps = 0.
  if (std::abs(k3) > kSpatialTol) {
    CVec4 eps{k0, k1, k2s, (m2 + k3 * k3) / k3};
    out.push_back(make_mode_entry(0.0, eps, SpinKind::longitudinal));
  } else {
    // k3 = 0: the only W^3-kernel direction with k.eps = 0 is the x3 axis
    out.push_back(make_mode_entry(0.0, CVec4{0, 0, 0, 1}, SpinKind::longitudinal, true));
  }

  const double perp2 = k1 * k1 + k2s * k2s;
  if (perp2 < kSpatialTol * kSpatialTol * k0 * k0) {
    // k along x3 (or at rest): circular polarizations
    out.push_back(make_mode_entry(+lam, CVec4{0, 1, cplx{0, 1}, 0}, SpinKind::circular_plus));
    out.push_back(make_mode_entry(-lam, CVec4{0, 1, cplx{0, -1}, 0}, SpinKind::circular_minus));
  } else {
    for (const double sgn : {+1.0, -1.0}) {
      const double l = sgn * lam;
      // component ratios satisfying the eigen-system; the sign convention
      // carries helicity +-lam for these
      const cplx I{0, 1};
      const cplx e0 = 1.0;
      const cplx e1 = (-l * k0 - I * k1 * k2s) / (-l * k1 - I * k0 * k2s);
      const cplx e2 = (-l * k0 + I * k1 * k2s) / (-l * k2s + I * k0 * k1);
      out.push_back(make_mode_entry(
          l, CVec4{e0, e1, e2, 0},
          sgn > 0 ? SpinKind::circular_plus : SpinKind::circular_minus));
    }
  }
  return out;
}

std::vector<SpinMode> eigenmodes_w0(const Vec4& k) {
  const double k2 = minkowski_dot(k, k);
  if (!(k2 > 0) || !(k[0] > 0)) {
    throw std::invalid_argument("eigenmodes_w0: k must be future-pointing time-like");
  }
  const double m2 = k2;
  const double k0 = k[0], k1 = k[1], k2s = k[2], k3 = k[3];
  const double kk = k1 * k1 + k2s * k2s + k3 * k3;
  std::vector<SpinMode> out;

  out.push_back(make_mode_entry(0.0, CVec4{(k0 * k0 - m2) / k0, k1, k2s, k3},
                                SpinKind::longitudinal, kk < kSpatialTol * kSpatialTol));
  if (kk < kSpatialTol * kSpatialTol) {
    // rest frame: W^0 vanishes; only the lambda = 0 spectrum exists
    return out;
  }
  const double lam = std::sqrt(kk);
  const double perp2 = k1 * k1 + k2s * k2s;
  if (perp2 < kSpatialTol * kSpatialTol * kk) {
    // k along x3: helicity pair; W^0 = -k3 M3-type rotation in (x1,x2)
    out.push_back(make_mode_entry(+lam, CVec4{0, 1, cplx{0, -1}, 0}, SpinKind::transverse));
    out.push_back(make_mode_entry(-lam, CVec4{0, 1, cplx{0, 1}, 0}, SpinKind::transverse));
  } else {
    for (const double sgn : {+1.0, -1.0}) {
      const double l = sgn * lam;
      const cplx I{0, 1};
      const cplx e3 = 1.0;
      const cplx e1 = (-k1 * k3 - I * l * k2s) / (l * l - k3 * k3);
      const cplx e2 = (-k2s * k3 + I * l * k1) / (l * l - k3 * k3);
      out.push_back(make_mode_entry(l, CVec4{0, e1, e2, e3}, SpinKind::transverse));
    }
  }
  return out;
}

std::array<CMat4, 3> spin_operator(const Vec4& k) {
  const PauliLubanski pl = pauli_lubanski(k);
  const double m = pl.mass;
  const Vec4 p = lower(k);  // covariant momentum components
  std::array<CMat4, 3> s;
  for (int i = 0; i < 3; ++i) {
    const cplx coeff = p[i + 1] / (m + p[0]);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        s[i](a, b) = (pl.W[i + 1](a, b) - coeff * pl.W[0](a, b)) / m;
  }
  return s;
}

}  // namespace procaflow

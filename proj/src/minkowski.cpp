#include "procaflow/minkowski.hpp"

#include <cmath>
#include <stdexcept>

namespace procaflow {

namespace detail {
bool dual_sign_fault = false;
}

Vec4 operator+(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
Vec4 operator-(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
Vec4 operator*(double s, const Vec4& v) { return {s * v[0], s * v[1], s * v[2], s * v[3]}; }
Vec4 operator-(const Vec4& v) { return {-v[0], -v[1], -v[2], -v[3]}; }

CVec4 operator+(const CVec4& a, const CVec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
CVec4 operator-(const CVec4& a, const CVec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
CVec4 operator*(cplx s, const CVec4& v) { return {s * v[0], s * v[1], s * v[2], s * v[3]}; }

template <class T>
int Antisym4<T>::slot(int mu, int nu) {
  static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[mu][nu];
}
template struct Antisym4<double>;
template struct Antisym4<cplx>;

AntisymR operator+(const AntisymR& a, const AntisymR& b) {
  AntisymR r;
  for (int i = 0; i < 6; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}
AntisymR operator*(double s, const AntisymR& g) {
  AntisymR r;
  for (int i = 0; i < 6; ++i) r.c[i] = s * g.c[i];
  return r;
}

int Sym4::slot(int mu, int nu) {
  static constexpr int table[4][4] = {{0, 1, 2, 3}, {1, 4, 5, 6}, {2, 5, 7, 8}, {3, 6, 8, 9}};
  return table[mu][nu];
}

Sym4 operator+(const Sym4& a, const Sym4& b) {
  Sym4 r;
  for (int i = 0; i < 10; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}
Sym4 operator-(const Sym4& a, const Sym4& b) {
  Sym4 r;
  for (int i = 0; i < 10; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}
Sym4 operator*(double s, const Sym4& t) {
  Sym4 r;
  for (int i = 0; i < 10; ++i) r.c[i] = s * t.c[i];
  return r;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}
Vec4 operator*(const Mat4& a, const Vec4& v) {
  Vec4 r;
  for (int i = 0; i < 4; ++i) {
    double s = 0;
    for (int k = 0; k < 4; ++k) s += a(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

CMat4 operator*(const CMat4& a, const CMat4& b) {
  CMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}
CMat4 operator-(const CMat4& a, const CMat4& b) {
  CMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}
CMat4 operator*(cplx s, const CMat4& a) {
  CMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = s * a(i, j);
  return r;
}
CVec4 operator*(const CMat4& a, const CVec4& v) {
  CVec4 r;
  for (int i = 0; i < 4; ++i) {
    cplx s = 0;
    for (int k = 0; k < 4; ++k) s += a(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

Vec4 lower(const Vec4& v) { return {v[0], -v[1], -v[2], -v[3]}; }
CVec4 lower(const CVec4& v) { return {v[0], -v[1], -v[2], -v[3]}; }

double minkowski_dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}
cplx minkowski_dot(const CVec4& a, const CVec4& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}
cplx hermitian_dot(const CVec4& a, const CVec4& b) {
  return std::conj(a[0]) * b[0] - std::conj(a[1]) * b[1] - std::conj(a[2]) * b[2] -
         std::conj(a[3]) * b[3];
}

double euclid_norm(const Vec4& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}
double euclid_norm(const CVec4& v) {
  double s = 0;
  for (int i = 0; i < 4; ++i) s += std::norm(v[i]);
  return std::sqrt(s);
}
double frobenius_norm(const AntisymR& g) {
  double s = 0;
  for (int i = 0; i < 6; ++i) s += g.c[i] * g.c[i];
  return std::sqrt(2.0 * s);
}
double frobenius_norm(const Sym4& t) {
  double s = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) s += t(mu, nu) * t(mu, nu);
  return std::sqrt(s);
}

Mat4 mixed(const AntisymR& g) {
  Mat4 r;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) r(mu, nu) = metric_diag[mu] * g(mu, nu);
  return r;
}
Mat4 mixed(const Sym4& t) {
  Mat4 r;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) r(mu, nu) = metric_diag[mu] * t(mu, nu);
  return r;
}
CMat4 mixed(const AntisymC& g) {
  CMat4 r;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) r(mu, nu) = metric_diag[mu] * g(mu, nu);
  return r;
}

Vec4 apply_mixed(const AntisymR& g, const Vec4& v) {
  Vec4 r{};
  for (int mu = 0; mu < 4; ++mu) {
    double s = 0;
    for (int nu = 0; nu < 4; ++nu) s += g(mu, nu) * v[nu];
    r[mu] = metric_diag[mu] * s;
  }
  return r;
}
CVec4 apply_mixed(const AntisymC& g, const CVec4& v) {
  CVec4 r{};
  for (int mu = 0; mu < 4; ++mu) {
    cplx s = 0;
    for (int nu = 0; nu < 4; ++nu) s += g(mu, nu) * v[nu];
    r[mu] = metric_diag[mu] * s;
  }
  return r;
}

namespace {
// *G components under eps_{0123} = +1; raising G^{0i} = -G_{0i}, G^{ij} = G_{ij}
template <class T>
Antisym4<T> hodge_impl(const Antisym4<T>& g) {
  Antisym4<T> d;
  d.set(0, 1, g(2, 3));
  d.set(0, 2, -g(1, 3));
  d.set(0, 3, g(1, 2));
  d.set(1, 2, -g(0, 3));
  d.set(1, 3, g(0, 2));
  d.set(2, 3, -g(0, 1));
  if (detail::dual_sign_fault) {
    d.set(0, 1, -d(0, 1));
    d.set(0, 2, -d(0, 2));
    d.set(0, 3, -d(0, 3));
  }
  return d;
}
}  // namespace

AntisymR hodge_dual(const AntisymR& g) { return hodge_impl(g); }
AntisymC hodge_dual(const AntisymC& g) { return hodge_impl(g); }

double contract(const AntisymR& a, const AntisymR& b) {
  // 2 * [ -sum_i a_0i b_0i + sum_{i<j} a_ij b_ij ]
  double s = 0;
  s -= a(0, 1) * b(0, 1) + a(0, 2) * b(0, 2) + a(0, 3) * b(0, 3);
  s += a(1, 2) * b(1, 2) + a(1, 3) * b(1, 3) + a(2, 3) * b(2, 3);
  return 2.0 * s;
}

FieldInvariants invariants(const AntisymR& g) {
  const double s1 = contract(g, g);
  const double s2 = contract(hodge_dual(g), g);
  return {s1, s2, 0.5 * std::hypot(s1, s2)};
}

AntisymR duality_rotate(const AntisymR& g, double theta) {
  const AntisymR d = hodge_dual(g);
  AntisymR r;
  const double c = std::cos(theta), s = std::sin(theta);
  for (int i = 0; i < 6; ++i) r.c[i] = c * g.c[i] + s * d.c[i];
  return r;
}

void eb_split(const AntisymR& g, std::array<double, 3>& e, std::array<double, 3>& b) {
  e = {g(0, 1), g(0, 2), g(0, 3)};
  b = {-g(2, 3), g(1, 3), -g(1, 2)};
}

AntisymR antisym_from_eb(const std::array<double, 3>& e, const std::array<double, 3>& b) {
  AntisymR g;
  g.set(0, 1, e[0]);
  g.set(0, 2, e[1]);
  g.set(0, 3, e[2]);
  g.set(2, 3, -b[0]);
  g.set(1, 3, b[1]);
  g.set(1, 2, -b[2]);
  return g;
}

Vec4 lorentz_boost(const Vec4& v, const Vec4& timelike, const Vec4& spacelike,
                   double rapidity) {
  constexpr double tol = 1e-10;
  if (std::abs(minkowski_dot(timelike, timelike) - 1.0) > tol ||
      std::abs(minkowski_dot(spacelike, spacelike) + 1.0) > tol ||
      std::abs(minkowski_dot(timelike, spacelike)) > tol) {
    throw std::invalid_argument("lorentz_boost: plane not orthonormal (timelike, spacelike)");
  }
  const double a = minkowski_dot(v, timelike);
  const double b = -minkowski_dot(v, spacelike);
  const Vec4 perp = v - a * timelike - b * spacelike;
  const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
  return (a * ch + b * sh) * timelike + (a * sh + b * ch) * spacelike + perp;
}

}  // namespace procaflow

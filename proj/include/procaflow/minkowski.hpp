#pragma once

#include <array>
#include <complex>
#include <cstddef>

// Fixed-dimension Minkowski tensor algebra, signature (+,-,-,-).
//
// Conventions used throughout:
//   - vector components are stored contravariant (index order t, x1, x2, x3);
//     lowering an index is always explicit
//   - antisymmetric tensors G_{mu nu} and symmetric tensors T_{mu nu} are
//     stored with lower indices
//   - Levi-Civita sign fixed by eps_{0123} = +1 (lower indices); with this
//     choice *G.G = +4 E.B
//   - natural units, hbar = c = 1

namespace procaflow {

using cplx = std::complex<double>;

struct Vec4 {
  std::array<double, 4> c{};

  double& operator[](std::size_t i) { return c[i]; }
  const double& operator[](std::size_t i) const { return c[i]; }
};

struct CVec4 {
  std::array<cplx, 4> c{};

  CVec4() = default;
  CVec4(cplx a, cplx b, cplx d, cplx e) : c{a, b, d, e} {}
  explicit CVec4(const Vec4& v) : c{v[0], v[1], v[2], v[3]} {}

  cplx& operator[](std::size_t i) { return c[i]; }
  const cplx& operator[](std::size_t i) const { return c[i]; }

  Vec4 real() const { return {c[0].real(), c[1].real(), c[2].real(), c[3].real()}; }
  Vec4 imag() const { return {c[0].imag(), c[1].imag(), c[2].imag(), c[3].imag()}; }
};

Vec4 operator+(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a, const Vec4& b);
Vec4 operator*(double s, const Vec4& v);
Vec4 operator-(const Vec4& v);
CVec4 operator+(const CVec4& a, const CVec4& b);
CVec4 operator-(const CVec4& a, const CVec4& b);
CVec4 operator*(cplx s, const CVec4& v);

// Antisymmetric rank-2 tensor, lower indices.  Only the six independent
// components are stored (order 01, 02, 03, 12, 13, 23); (mu,nu) access
// materialises the sign so G_{mu nu} = -G_{nu mu} holds exactly.
template <class T>
struct Antisym4 {
  std::array<T, 6> c{};

  static int slot(int mu, int nu);  // -1 on diagonal

  T operator()(int mu, int nu) const {
    if (mu == nu) return T{};
    const int s = slot(mu, nu);
    return mu < nu ? c[s] : -c[s];
  }
  void set(int mu, int nu, T v) {
    const int s = slot(mu, nu);
    c[s] = (mu < nu) ? v : -v;
  }
};

using AntisymR = Antisym4<double>;
using AntisymC = Antisym4<cplx>;

AntisymR operator+(const AntisymR& a, const AntisymR& b);
AntisymR operator*(double s, const AntisymR& g);

// Symmetric rank-2 tensor, lower indices; ten independent components.
struct Sym4 {
  std::array<double, 10> c{};

  static int slot(int mu, int nu);

  double operator()(int mu, int nu) const { return c[slot(mu, nu)]; }
  void set(int mu, int nu, double v) { c[slot(mu, nu)] = v; }
  void add(int mu, int nu, double v) { c[slot(mu, nu)] += v; }
};

Sym4 operator+(const Sym4& a, const Sym4& b);
Sym4 operator-(const Sym4& a, const Sym4& b);
Sym4 operator*(double s, const Sym4& t);

// General 4x4 real matrix; used for mixed tensors A^mu_nu and the dense
// eigenproblem.
struct Mat4 {
  std::array<std::array<double, 4>, 4> m{};

  double& operator()(int i, int j) { return m[i][j]; }
  const double& operator()(int i, int j) const { return m[i][j]; }
};

Mat4 operator*(const Mat4& a, const Mat4& b);
Vec4 operator*(const Mat4& a, const Vec4& v);

struct CMat4 {
  std::array<std::array<cplx, 4>, 4> m{};

  cplx& operator()(int i, int j) { return m[i][j]; }
  const cplx& operator()(int i, int j) const { return m[i][j]; }
};

CMat4 operator*(const CMat4& a, const CMat4& b);
CMat4 operator-(const CMat4& a, const CMat4& b);
CMat4 operator*(cplx s, const CMat4& a);
CVec4 operator*(const CMat4& a, const CVec4& v);

inline constexpr std::array<double, 4> metric_diag{1.0, -1.0, -1.0, -1.0};

// g_{mu nu} v^nu
Vec4 lower(const Vec4& v);
CVec4 lower(const CVec4& v);

// a^0 b^0 - a.b, no conjugation on complex inputs
double minkowski_dot(const Vec4& a, const Vec4& b);
cplx minkowski_dot(const CVec4& a, const CVec4& b);
// conjugates the first argument
cplx hermitian_dot(const CVec4& a, const CVec4& b);

double euclid_norm(const Vec4& v);
double euclid_norm(const CVec4& v);
double frobenius_norm(const AntisymR& g);
double frobenius_norm(const Sym4& t);

// mixed tensor G^mu_nu = g^{mu a} G_{a nu}
Mat4 mixed(const AntisymR& g);
Mat4 mixed(const Sym4& t);
CMat4 mixed(const AntisymC& g);

// (G v)^mu = G^mu_nu v^nu
Vec4 apply_mixed(const AntisymR& g, const Vec4& v);
CVec4 apply_mixed(const AntisymC& g, const CVec4& v);

// Hodge dual *G_{mu nu} = (1/2) eps_{mu nu rho sigma} G^{rho sigma},
// eps_{0123} = +1.  Applying twice gives -G.
AntisymR hodge_dual(const AntisymR& g);
AntisymC hodge_dual(const AntisymC& g);

// G_{ab} H^{ab}
double contract(const AntisymR& a, const AntisymR& b);

struct FieldInvariants {
  double s1;  // G.G = 2(B^2 - E^2)
  double s2;  // *G.G = +4 E.B under eps_{0123} = +1
  double k;   // (1/2) sqrt(s1^2 + s2^2), the maxwellian eigenvalue magnitude
};

FieldInvariants invariants(const AntisymR& g);

// duality rotation: G cos(theta) + *G sin(theta)
AntisymR duality_rotate(const AntisymR& g, double theta);

// E_i = G_{0i}, B from G_{ij} = -eps_{ijk} B^k
void eb_split(const AntisymR& g, std::array<double, 3>& e, std::array<double, 3>& b);
AntisymR antisym_from_eb(const std::array<double, 3>& e, const std::array<double, 3>& b);

// Boost within the two-plane spanned by an orthonormal (timelike, spacelike)
// pair; vectors orthogonal to the plane are unchanged.  Throws
// std::invalid_argument if the plane fails the orthonormality check (1e-10).
Vec4 lorentz_boost(const Vec4& v, const Vec4& timelike, const Vec4& spacelike,
                   double rapidity);

namespace detail {
// test hook: flips the sign of the 0i block of hodge_dual results
extern bool dual_sign_fault;
}  // namespace detail

}  // namespace procaflow

#include "procaflow/tetrad_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace procaflow {

namespace {

constexpr double kDegenerateTol = 1e-10;

Vec4 normalize_timelike(Vec4 v) {
  const double n2 = minkowski_dot(v, v);
  v = (1.0 / std::sqrt(n2)) * v;
  return v[0] >= 0 ? v : -v;
}

Vec4 normalize_spacelike(const Vec4& v) {
  return (1.0 / std::sqrt(-minkowski_dot(v, v))) * v;
}

// Minkowski Gram-Schmidt of v against a unit time-like T (T.T = +1).
Vec4 reject_timelike(const Vec4& v, const Vec4& t) { return v - minkowski_dot(v, t) * t; }

}  // namespace

std::string to_string(Causal c) {
  switch (c) {
    case Causal::timelike: return "timelike";
    case Causal::spacelike: return "spacelike";
    case Causal::null: return "null";
    case Causal::degenerate: return "degenerate";
  }
  return "?";
}

NullBasis null_basis(const FrameTetrad& f) {
  const double r = 1.0 / std::sqrt(2.0);
  NullBasis b;
  for (int i = 0; i < 4; ++i) {
    b.l[i] = r * (f.T[i] + f.Z[i]);
    b.n[i] = r * (f.T[i] - f.Z[i]);
    b.m[i] = r * cplx{f.X[i], -f.Y[i]};
    b.mbar[i] = r * cplx{f.X[i], f.Y[i]};
  }
  return b;
}

double extremal_angle(const AntisymR& g) {
  const FieldInvariants inv = invariants(g);
  if (inv.k <= 0) throw std::invalid_argument("extremal_angle: vanishing field");
  // rotate (s1, s2) to (-2k, 0): electric-dominant extremal field
  return 0.5 * std::atan2(-inv.s2, -inv.s1);
}

NullEigenvectors null_eigenvectors(const AntisymR& g) {
  const FieldInvariants inv = invariants(g);
  const double scale = frobenius_norm(g);
  if (inv.k <= kDegenerateTol * scale * scale) {
    throw std::invalid_argument("null_eigenvectors: null field (k ~ 0)");
  }
  // lam1^2 - lam2^2 = -s1/2, lam1^2 + lam2^2 = k
  const double lam1 = std::sqrt(std::max(0.0, 0.5 * (inv.k - 0.5 * inv.s1)));
  const double lam2 = std::sqrt(std::max(0.0, 0.5 * (inv.k + 0.5 * inv.s1)));

  NullEigenvectors out;
  out.imag_eigenvalue = lam2;
  out.degenerate_timelike = lam1 <= kDegenerateTol * scale;
  out.degenerate_spacelike = lam2 <= kDegenerateTol * scale;

  const Eigen4Result eg = eigen_solve4(mixed(g));
  // real nonzero pair
  int found = 0;
  for (int i = 0; i < 4 && !out.degenerate_timelike; ++i) {
    if (!eg.is_real[i]) continue;
    if (std::abs(eg.values[i].real()) < 0.5 * lam1) continue;
    Vec4 v = eg.vec_re[i];
    if (std::abs(v[0]) < 1e-8) continue;  // null vectors here have v0 != 0
    v = (1.0 / v[0]) * v;
    if (found < 2) {
      out.timelike_plane[found] = v;
      out.real_eigenvalues[found] = eg.values[i].real();
      ++found;
    }
  }
  if (!out.degenerate_timelike && found != 2) {
    throw std::runtime_error("null_eigenvectors: real pair extraction failed");
  }
  if (found == 2 && out.real_eigenvalues[0] < out.real_eigenvalues[1]) {
    std::swap(out.timelike_plane[0], out.timelike_plane[1]);
    std::swap(out.real_eigenvalues[0], out.real_eigenvalues[1]);
  }

  // complex pair: real/imag parts span the space-like plane
  bool got_pair = false;
  for (int i = 0; i < 4 && !out.degenerate_spacelike; ++i) {
    if (eg.is_real[i] || eg.values[i].imag() <= 0) continue;
    Vec4 a = eg.vec_re[i], b = eg.vec_im[i];
    // orthonormalize within the plane (both space-like)
    a = normalize_spacelike(a);
    Vec4 bp = b + minkowski_dot(b, a) * a;
    out.spacelike_plane = {a, normalize_spacelike(bp)};
    got_pair = true;
    break;
  }
  if (out.degenerate_timelike || out.degenerate_spacelike) {
    // one invariant plane degenerates to an eigenvalue-zero 2-space; recover
    // it as the time/space-like plane of the extremal-rotated field
    const double th = extremal_angle(g);
    const AntisymR gx = duality_rotate(g, th);
    const Eigen4Result ex = eigen_solve4(mixed(gx));
    if (out.degenerate_timelike) {
      // G is magnetic-type: the time-like plane of g is carried by *gx
      // structure; recover null pair from gx (electric-dominant, lam2 = 0)
      int f2 = 0;
      for (int i = 0; i < 4; ++i) {
        if (!ex.is_real[i] || std::abs(ex.values[i].real()) < 1e-3 * std::sqrt(inv.k)) continue;
        Vec4 v = ex.vec_re[i];
        if (std::abs(v[0]) < 1e-8) continue;
        v = (1.0 / v[0]) * v;
        if (f2 < 2) {
          out.timelike_plane[f2] = v;
          out.real_eigenvalues[f2] = 0.0;
          ++f2;
        }
      }
      if (f2 != 2) throw std::runtime_error("null_eigenvectors: degenerate recovery failed");
    }
    if (out.degenerate_spacelike && !got_pair) {
      // space-like plane = orthogonal complement of the time-like plane
      const Vec4 t = normalize_timelike(out.timelike_plane[0] + out.timelike_plane[1]);
      Vec4 z = reject_timelike(out.timelike_plane[0] - out.timelike_plane[1], t);
      z = normalize_spacelike(z);
      std::array<Vec4, 2> sp{};
      int f2 = 0;
      for (int a = 0; a < 4 && f2 < 2; ++a) {
        Vec4 e{};
        e[a] = 1;
        Vec4 c = reject_timelike(e, t);
        c = c + minkowski_dot(c, z) * z;
        for (int q = 0; q < f2; ++q) c = c + minkowski_dot(c, sp[q]) * sp[q];
        if (euclid_norm(c) < 1e-6) continue;
        sp[f2++] = normalize_spacelike(c);
      }
      if (f2 != 2) throw std::runtime_error("null_eigenvectors: complement construction failed");
      out.spacelike_plane = sp;
    }
  }
  return out;
}

std::pair<FrameTetrad, DecompositionCase> tetrad_from_field(const AntisymR& g,
                                                            const Vec4& phi) {
  const FieldInvariants inv = invariants(g);
  const double scale = frobenius_norm(g);
  if (!(inv.k > kDegenerateTol * scale * scale) || scale == 0) {
    throw std::invalid_argument("tetrad_from_field: null or vanishing field");
  }
  const double th = extremal_angle(g);
  const AntisymR gx = duality_rotate(g, th);
  const AntisymR gxd = hodge_dual(gx);

  // U = Gx phi lies in the time-like two-plane of Gx and V = Gx U is the
  // projection of phi onto it (up to the eigenvalue square); likewise W, Zs
  // for the dual and the space-like plane.
  const Vec4 U = apply_mixed(gx, phi);
  const Vec4 V = apply_mixed(gx, U);
  const Vec4 Wv = apply_mixed(gxd, phi);
  const Vec4 Zs = apply_mixed(gxd, Wv);

  const double vec_scale = scale * scale * euclid_norm(phi);
  const bool have_t_proj = euclid_norm(V) > 1e-9 * vec_scale;
  const bool have_s_proj = euclid_norm(Zs) > 1e-9 * vec_scale;

  FrameTetrad f;
  DecompositionCase d;
  d.k = inv.k;

  bool t_plane_done = false;
  if (have_t_proj) {
    const double vnorm2 = minkowski_dot(V, V);
    const double v2rel = vnorm2 / (euclid_norm(V) * euclid_norm(V));
    if (v2rel > 1e-9) {
      d.case_tag = CaseTag::i;
      f.T = normalize_timelike(V);
      f.Z = normalize_spacelike(U);
      t_plane_done = true;
    } else if (v2rel < -1e-9) {
      d.case_tag = CaseTag::ii;
      f.Z = normalize_spacelike(V);
      f.T = normalize_timelike(U);
      t_plane_done = true;
    } else {
      d.degenerate = true;  // phi projection is null in the time-like plane
    }
  }
  if (!t_plane_done) {
    // phi carries no usable component in the time-like plane: take the
    // canonical frame of the null eigenvector pair (unit time components)
    d.case_tag = CaseTag::ii;
    d.fallback_seed = d.fallback_seed || !have_t_proj;
    const NullEigenvectors ne = null_eigenvectors(gx);
    f.T = normalize_timelike(ne.timelike_plane[0] + ne.timelike_plane[1]);
    Vec4 z = reject_timelike(ne.timelike_plane[0] - ne.timelike_plane[1], f.T);
    f.Z = normalize_spacelike(z);
  }

  if (have_s_proj) {
    Vec4 a = normalize_spacelike(Zs);
    Vec4 b = Wv + minkowski_dot(Wv, a) * a;
    b = normalize_spacelike(b);
    if (d.case_tag == CaseTag::i) {
      f.X = a;
      f.Y = b;
    } else {
      f.Y = a;
      f.X = b;
    }
  } else {
    // seed the space-like plane from coordinate axes through the dual action
    d.fallback_seed = true;
    std::array<Vec4, 2> sp{};
    int found = 0;
    for (int axis = 0; axis < 4 && found < 2; ++axis) {
      Vec4 e{};
      e[axis] = 1;
      Vec4 c = apply_mixed(gxd, e);
      c = reject_timelike(c, f.T);
      c = c + minkowski_dot(c, f.Z) * f.Z;
      for (int q = 0; q < found; ++q) c = c + minkowski_dot(c, sp[q]) * sp[q];
      if (euclid_norm(c) < 1e-7 * scale) continue;
      sp[found++] = normalize_spacelike(c);
    }
    if (found != 2) throw std::runtime_error("tetrad_from_field: space-like seed failed");
    f.X = sp[0];
    f.Y = sp[1];
  }

  d.alpha = minkowski_dot(phi, f.T);
  d.beta = -minkowski_dot(phi, f.Z);
  d.gamma = -minkowski_dot(phi, f.X);
  d.delta = -minkowski_dot(phi, f.Y);
  return {f, d};
}

std::array<EigenPair, 4> eigensystem_case(const DecompositionCase& decomp, double m,
                                          double phi_norm2) {
  const double k = decomp.k;
  const double m2 = m * m;
  const double shift = -0.5 * m2 * phi_norm2;

  auto classify = [](const Vec4& v) {
    const double n2 = minkowski_dot(v, v);
    const double e2 = euclid_norm(v) * euclid_norm(v);
    if (std::abs(n2) <= kDegenerateTol * e2) return Causal::null;
    return n2 > 0 ? Causal::timelike : Causal::spacelike;
  };

  std::array<EigenPair, 4> out{};
  if (decomp.case_tag == CaseTag::i) {
    const double a = decomp.alpha, c = decomp.gamma;
    // (K - k - m^2 a^2)(K + k + m^2 c^2) + (m^2 a c)^2 = 0
    const double b_ = m2 * (a * a - c * c);
    const double c_ = -(k * k + k * m2 * (a * a + c * c));
    const double disc = b_ * b_ - 4 * c_;
    if (disc < 0) throw std::runtime_error("eigensystem_case: negative discriminant");
    int idx = 0;
    for (const double sgn : {+1.0, -1.0}) {
      const double K = 0.5 * (b_ + sgn * std::sqrt(disc));
      Vec4 v{a * (K + k), 0, c * (K - k), 0};  // tetrad coordinates (T,Z,X,Y)
      out[idx++] = {K + shift, v, classify(v)};
    }
    out[idx++] = {k + shift, Vec4{0, 1, 0, 0}, Causal::spacelike};
    out[idx++] = {-k + shift, Vec4{0, 0, 0, 1}, Causal::spacelike};
  } else {
    const double b = decomp.beta, dd = decomp.delta;
    // (K - k + m^2 b^2)(K + k + m^2 d^2) - (m^2 b d)^2 = 0
    const double b_ = -m2 * (b * b + dd * dd);
    const double c_ = -(k * k + k * m2 * (dd * dd - b * b));
    const double disc = b_ * b_ - 4 * c_;
    if (disc < 0) throw std::runtime_error("eigensystem_case: negative discriminant");
    int idx = 0;
    out[idx++] = {k + shift, Vec4{1, 0, 0, 0}, Causal::timelike};
    out[idx++] = {-k + shift, Vec4{0, 0, 1, 0}, Causal::spacelike};
    for (const double sgn : {+1.0, -1.0}) {
      const double K = 0.5 * (b_ + sgn * std::sqrt(disc));
      Vec4 v{0, b * (K + k), 0, dd * (K - k)};
      out[idx++] = {K + shift, v, classify(v)};
    }
  }
  // tetrad coordinates carry the Minkowski norm directly; normalize scale
  for (EigenPair& p : out) {
    const double n = euclid_norm(p.vector);
    if (n > 0) p.vector = (1.0 / n) * p.vector;
  }
  return out;
}

namespace {

Mat4 plane_projector(const Vec4& t, const Vec4& z) {
  // P^mu_nu = T^mu T_nu - Z^mu Z_nu
  const Vec4 tl = lower(t), zl = lower(z);
  Mat4 p;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) p(i, j) = t[i] * tl[j] - z[i] * zl[j];
  return p;
}

// unit time-like direction of (plane ∩ Omega); nullopt if the intersection
// is not a time-like line
std::optional<Vec4> plane_omega_intersection(const Vec4& T, const Vec4& Z, const Vec4& that,
                                             const Vec4& zhat) {
  // solve a T + b Z = c that + d zhat. The 4x4 system [T Z -that -zhat] has a
  // null vector iff the planes intersect; find it by Gaussian elimination on
  // the 4x4 with full pivoting, taking the least-determined direction.
  double m[4][4];
  for (int r = 0; r < 4; ++r) {
    m[r][0] = T[r];
    m[r][1] = Z[r];
    m[r][2] = -that[r];
    m[r][3] = -zhat[r];
  }
  int col_of[4] = {0, 1, 2, 3};
  int rank = 0;
  for (int step = 0; step < 4 && rank < 4; ++step) {
    int pr = -1, pc = -1;
    double best = 1e-9;
    for (int r = rank; r < 4; ++r)
      for (int c = rank; c < 4; ++c)
        if (std::abs(m[r][c]) > best) {
          best = std::abs(m[r][c]);
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    for (int c = 0; c < 4; ++c) std::swap(m[rank][c], m[pr][c]);
    for (int r = 0; r < 4; ++r) std::swap(m[r][rank], m[r][pc]);
    std::swap(col_of[rank], col_of[pc]);
    for (int r = 0; r < 4; ++r) {
      if (r == rank) continue;
      const double f = m[r][rank] / m[rank][rank];
      for (int c = rank; c < 4; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  if (rank == 4) return std::nullopt;  // planes do not intersect
  // null vector: free variable = last permuted column
  double sol[4] = {0, 0, 0, 0};
  sol[col_of[3]] = 1.0;
  for (int r = rank - 1; r >= 0; --r) {
    double s = m[r][3] * 1.0;
    for (int c = r + 1; c < rank; ++c) s += m[r][c] * sol[col_of[c]];
    sol[col_of[r]] = -s / m[r][r];
  }
  Vec4 v = sol[0] * T + sol[1] * Z;
  const double n2 = minkowski_dot(v, v);
  if (n2 < 1e-10 * euclid_norm(v) * euclid_norm(v) || euclid_norm(v) < 1e-10)
    return std::nullopt;
  return normalize_timelike(v);
}

}  // namespace

CommonPlane common_plane(const FrameTetrad& t1, const FrameTetrad& t2) {
  const Mat4 p1 = plane_projector(t1.T, t1.Z);
  const Mat4 p2 = plane_projector(t2.T, t2.Z);

  auto rapidity_in = [](const Vec4& T, const Vec4& zhat) {
    return std::asinh(-minkowski_dot(T, zhat));
  };

  // identical planes: Omega is the shared plane itself
  const Vec4 r1 = p1 * t2.T - t2.T;
  const Vec4 r2 = p1 * t2.Z - t2.Z;
  if (euclid_norm(r1) < 1e-9 && euclid_norm(r2) < 1e-9) {
    CommonPlane cp;
    cp.identical_planes = true;
    cp.t_hat = t1.T;
    cp.z_hat = t1.Z;
    cp.theta1 = 0.0;
    cp.theta2 = rapidity_in(t2.T, cp.z_hat);
    return cp;
  }

  // generic: Omega is the time-like invariant plane of the composition of
  // the two plane reflections
  Mat4 R;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0;
      for (int k = 0; k < 4; ++k)
        s += (2 * p1(i, k) - (i == k ? 1.0 : 0.0)) * (2 * p2(k, j) - (k == j ? 1.0 : 0.0));
      R(i, j) = s;
    }
  const Eigen4Result eg = eigen_solve4(R);

  Vec4 l{}, n{};
  int nreal_nonunit = 0;
  for (int i = 0; i < 4; ++i) {
    if (!eg.is_real[i]) continue;
    const double lam = eg.values[i].real();
    if (std::abs(std::abs(lam) - 1.0) > 1e-8) {
      if (nreal_nonunit == 0)
        l = eg.vec_re[i];
      else if (nreal_nonunit == 1)
        n = eg.vec_re[i];
      ++nreal_nonunit;
    }
  }
  CommonPlane cp;
  if (nreal_nonunit == 2) {
    // boost pair: two null directions spanning Omega
    if (std::abs(l[0]) < 1e-10 || std::abs(n[0]) < 1e-10)
      throw std::runtime_error("common_plane: null direction with vanishing time component");
    l = (1.0 / l[0]) * l;
    n = (1.0 / n[0]) * n;
    cp.t_hat = normalize_timelike(l + n);
    cp.z_hat = normalize_spacelike(reject_timelike(l - n, cp.t_hat));
  } else {
    // pure-rotation relation: Omega is the fixed plane of R; collect
    // eigenvalue-one eigenvectors and split into a time-like pair
    std::vector<Vec4> fixed;
    for (int i = 0; i < 4; ++i)
      if (eg.is_real[i] && std::abs(eg.values[i].real() - 1.0) < 1e-8)
        fixed.push_back(eg.vec_re[i]);
    if (fixed.size() < 2) throw std::runtime_error("common_plane: no common time-like plane");
    // find the time-like direction within span(fixed)
    Vec4 tdir{};
    bool got = false;
    for (std::size_t a = 0; a < fixed.size() && !got; ++a)
      for (std::size_t b = 0; b < fixed.size() && !got; ++b) {
        // 2x2 eigen in the span: search combinations u = fixed[a] cos + fixed[b] sin
        if (a == b) {
          if (minkowski_dot(fixed[a], fixed[a]) > 1e-10) {
            tdir = fixed[a];
            got = true;
          }
          continue;
        }
        for (int step = 0; step <= 32; ++step) {
          const double ang = step * (3.14159265358979323846 / 32.0);
          const Vec4 u = std::cos(ang) * fixed[a] + std::sin(ang) * fixed[b];
          if (minkowski_dot(u, u) > 1e-8 * euclid_norm(u) * euclid_norm(u)) {
            tdir = u;
            got = true;
            break;
          }
        }
      }
    if (!got) throw std::runtime_error("common_plane: fixed plane is not time-like");
    cp.t_hat = normalize_timelike(tdir);
    Vec4 z{};
    bool gotz = false;
    for (const Vec4& f : fixed) {
      const Vec4 c = reject_timelike(f, cp.t_hat);
      if (euclid_norm(c) > 1e-7) {
        z = c;
        gotz = true;
        break;
      }
    }
    if (!gotz) throw std::runtime_error("common_plane: degenerate fixed plane");
    cp.z_hat = normalize_spacelike(z);
  }

  const auto i1 = plane_omega_intersection(t1.T, t1.Z, cp.t_hat, cp.z_hat);
  const auto i2 = plane_omega_intersection(t2.T, t2.Z, cp.t_hat, cp.z_hat);
  if (!i1 || !i2) throw std::runtime_error("common_plane: plane does not meet Omega time-like");
  cp.theta1 = rapidity_in(*i1, cp.z_hat);
  cp.theta2 = rapidity_in(*i2, cp.z_hat);
  return cp;
}

ComplexMasslessEigen eigensystem_complex_massless(double k1, double k2,
                                                  const CommonPlane& plane) {
  if (!(k1 >= 0) || !(k2 >= 0) || (k1 == 0 && k2 == 0)) {
    throw std::invalid_argument("eigensystem_complex_massless: need k1, k2 >= 0, not both 0");
  }
  const double C = k1 * std::cosh(2 * plane.theta1) + k2 * std::cosh(2 * plane.theta2);
  const double S = k1 * std::sinh(2 * plane.theta1) + k2 * std::sinh(2 * plane.theta2);
  const double R = std::sqrt(std::max(0.0, C * C - S * S));

  ComplexMasslessEigen out;
  out.timelike.eigenvalue = (k1 + k2) + R;
  out.spacelike.eigenvalue = (k1 + k2) - R;
  out.tanh_theta = (std::abs(S) > 0) ? (C - R) / S : 0.0;
  const double th = std::atanh(out.tanh_theta);
  const Vec4 that{1, 0, 0, 0}, zhat{0, 0, 0, 1};  // Omega-frame coordinates
  out.timelike.vector = std::cosh(th) * that + std::sinh(th) * zhat;
  out.timelike.causal = Causal::timelike;
  out.spacelike.vector = std::sinh(th) * that + std::cosh(th) * zhat;
  out.spacelike.causal = Causal::spacelike;
  return out;
}

EigenSystem eigensystem_numeric(const Sym4& t) {
  const Eigen4Result eg = eigen_solve4(mixed(t));
  EigenSystem out;
  int idx = 0;
  int n_timelike = 0;
  int timelike_at = -1;
  for (int i = 0; i < 4; ++i) {
    if (!eg.is_real[i]) {
      out.has_complex_pair = true;
      continue;
    }
    EigenPair p;
    p.eigenvalue = eg.values[i].real();
    p.vector = eg.vec_re[i];
    const double n2 = minkowski_dot(p.vector, p.vector);
    const double e2 = euclid_norm(p.vector) * euclid_norm(p.vector);
    if (std::abs(n2) <= kDegenerateTol * e2) {
      p.causal = Causal::null;
    } else if (n2 > 0) {
      p.causal = Causal::timelike;
      p.vector = normalize_timelike(p.vector);
      ++n_timelike;
      timelike_at = idx;
    } else {
      p.causal = Causal::spacelike;
      p.vector = normalize_spacelike(p.vector);
    }
    out.pairs[idx++] = p;
  }
  out.n_real = idx;
  if (n_timelike == 1) out.timelike_index = timelike_at;
  return out;
}

}  // namespace procaflow

#include "procaflow/eigen4.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace procaflow {

namespace {

constexpr int N = 4;
constexpr double EPS = std::numeric_limits<double>::epsilon();

// Iterative balancing by powers of two (norm-reducing diagonal similarity).
void balance(Mat4& a, std::array<double, N>& scale) {
  scale.fill(1.0);
  constexpr double radix = 2.0;
  bool done = false;
  int guard = 0;
  while (!done && guard++ < 50) {
    done = true;
    for (int i = 0; i < N; ++i) {
      double r = 0, c = 0;
      for (int j = 0; j < N; ++j)
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      if (c == 0 || r == 0) continue;
      double f = 1.0;
      const double s = c + r;
      while (c < r / radix) {
        c *= radix;
        r /= radix;
        f *= radix;
      }
      while (c > r * radix) {
        c /= radix;
        r *= radix;
        f /= radix;
      }
      if ((c + r) < 0.95 * s && f != 1.0) {
        done = false;
        scale[i] *= f;
        for (int j = 0; j < N; ++j) a(i, j) /= f;
        for (int j = 0; j < N; ++j) a(j, i) *= f;
      }
    }
  }
}

// Householder reduction to upper Hessenberg, accumulating the orthogonal
// transform into q (a = q h q^T).
void hessenberg(Mat4& a, Mat4& q) {
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) q(i, j) = (i == j) ? 1.0 : 0.0;

  for (int k = 0; k < N - 2; ++k) {
    double xnorm = 0;
    for (int i = k + 1; i < N; ++i) xnorm += a(i, k) * a(i, k);
    xnorm = std::sqrt(xnorm);
    if (xnorm <= EPS * std::abs(a(k + 1, k)) || xnorm == 0) continue;
    double alpha = (a(k + 1, k) >= 0) ? -xnorm : xnorm;
    std::array<double, N> v{};
    v[k + 1] = a(k + 1, k) - alpha;
    for (int i = k + 2; i < N; ++i) v[i] = a(i, k);
    double vnorm2 = 0;
    for (int i = k + 1; i < N; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0) continue;
    // a <- (I - 2 v v^T / v^T v) a (same from right), accumulate into q
    for (int j = 0; j < N; ++j) {
      double s = 0;
      for (int i = k + 1; i < N; ++i) s += v[i] * a(i, j);
      s *= 2.0 / vnorm2;
      for (int i = k + 1; i < N; ++i) a(i, j) -= s * v[i];
    }
    for (int i = 0; i < N; ++i) {
      double s = 0;
      for (int j = k + 1; j < N; ++j) s += a(i, j) * v[j];
      s *= 2.0 / vnorm2;
      for (int j = k + 1; j < N; ++j) a(i, j) -= s * v[j];
    }
    for (int i = 0; i < N; ++i) {
      double s = 0;
      for (int j = k + 1; j < N; ++j) s += q(i, j) * v[j];
      s *= 2.0 / vnorm2;
      for (int j = k + 1; j < N; ++j) q(i, j) -= s * v[j];
    }
  }
}

double subdiag_tol(const Mat4& h, int i) {
  double s = std::abs(h(i - 1, i - 1)) + std::abs(h(i, i));
  if (s == 0) s = 1.0;
  return EPS * s;
}

// Apply a Householder reflector built from (x,y,z) to rows/cols, chasing the
// Francis bulge through the active window [lo, hi].
void francis_step(Mat4& h, Mat4& q, int lo, int hi, double exceptional) {
  // double shift from the trailing 2x2 of the active block
  const double s = h(hi - 1, hi - 1) + h(hi, hi) + exceptional;
  const double p = h(hi - 1, hi - 1) * h(hi, hi) - h(hi - 1, hi) * h(hi, hi - 1);
  double x = h(lo, lo) * h(lo, lo) + h(lo, lo + 1) * h(lo + 1, lo) - s * h(lo, lo) + p;
  double y = h(lo + 1, lo) * (h(lo, lo) + h(lo + 1, lo + 1) - s);
  double z = (lo + 2 <= hi) ? h(lo + 1, lo) * h(lo + 2, lo + 1) : 0.0;

  for (int k = lo; k <= hi - 1; ++k) {
    const int r = std::min(k + 4, hi + 1);  // column update reaches the bulge row
    const int len = (k + 2 <= hi) ? 3 : 2;
    std::array<double, 3> v{x, y, z};
    double vnorm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (vnorm != 0) {
      double alpha = (v[0] >= 0) ? -vnorm : vnorm;
      v[0] -= alpha;
      double vn2 = 0;
      for (int i = 0; i < len; ++i) vn2 += v[i] * v[i];
      if (vn2 > 0) {
        // rows
        for (int j = std::max(lo, k - 1); j < N; ++j) {
          double t = 0;
          for (int i = 0; i < len; ++i) t += v[i] * h(k + i, j);
          t *= 2.0 / vn2;
          for (int i = 0; i < len; ++i) h(k + i, j) -= t * v[i];
        }
        // columns
        for (int i = 0; i < r; ++i) {
          double t = 0;
          for (int j = 0; j < len; ++j) t += h(i, k + j) * v[j];
          t *= 2.0 / vn2;
          for (int j = 0; j < len; ++j) h(i, k + j) -= t * v[j];
        }
        // accumulate
        for (int i = 0; i < N; ++i) {
          double t = 0;
          for (int j = 0; j < len; ++j) t += q(i, k + j) * v[j];
          t *= 2.0 / vn2;
          for (int j = 0; j < len; ++j) q(i, k + j) -= t * v[j];
        }
      }
    }
    if (k < hi - 1) {
      x = h(k + 1, k);
      y = h(k + 2, k);
      z = (k + 3 <= hi) ? h(k + 3, k) : 0.0;
    }
  }
  // clean spurious subdiagonal fill-in below the first subdiagonal
  for (int i = lo + 2; i <= hi; ++i)
    for (int j = lo; j <= i - 2; ++j) h(i, j) = 0.0;
}

// Reduce Hessenberg h to real Schur form; returns iteration count, sets ok.
int schur(Mat4& h, Mat4& q, bool& ok) {
  int iters = 0;
  int hi = N - 1;
  int since_deflation = 0;
  ok = true;
  while (hi > 0) {
    if (iters > 120) {
      ok = false;
      break;
    }
    // deflate
    int lo = hi;
    while (lo > 0 && std::abs(h(lo, lo - 1)) > subdiag_tol(h, lo)) --lo;
    if (lo > 0) h(lo, lo - 1) = 0.0;
    if (lo == hi) {
      hi -= 1;
      since_deflation = 0;
      continue;
    }
    if (lo == hi - 1) {
      // 2x2 block: split it now if its eigenvalues are real
      const double a11 = h(lo, lo), a12 = h(lo, hi), a21 = h(hi, lo), a22 = h(hi, hi);
      const double tr = a11 + a22, det = a11 * a22 - a12 * a21;
      const double disc = tr * tr / 4.0 - det;
      if (disc >= 0) {
        // Givens rotation sending the block to upper triangular
        const double lam = tr / 2.0 + ((tr >= 0) ? std::sqrt(disc) : -std::sqrt(disc));
        // eigenvector (a12, lam - a11) or (lam - a22, a21)
        double vx = a12, vy = lam - a11;
        if (std::hypot(vx, vy) < std::hypot(lam - a22, a21)) {
          vx = lam - a22;
          vy = a21;
        }
        const double nrm = std::hypot(vx, vy);
        if (nrm > 0) {
          const double c = vx / nrm, sn = vy / nrm;
          // G = [[c, sn], [-sn, c]] acting on (lo, hi): h <- G^T h G
          for (int j = 0; j < N; ++j) {
            const double t1 = h(lo, j), t2 = h(hi, j);
            h(lo, j) = c * t1 + sn * t2;
            h(hi, j) = -sn * t1 + c * t2;
          }
          for (int i = 0; i < N; ++i) {
            const double t1 = h(i, lo), t2 = h(i, hi);
            h(i, lo) = c * t1 + sn * t2;
            h(i, hi) = -sn * t1 + c * t2;
          }
          for (int i = 0; i < N; ++i) {
            const double t1 = q(i, lo), t2 = q(i, hi);
            q(i, lo) = c * t1 + sn * t2;
            q(i, hi) = -sn * t1 + c * t2;
          }
          h(hi, lo) = 0.0;
        }
      }
      hi = lo - 1;
      since_deflation = 0;
      continue;
    }
    const double exceptional =
        (since_deflation > 0 && since_deflation % 12 == 0)
            ? 0.75 * (std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2)))
            : 0.0;
    francis_step(h, q, lo, hi, exceptional);
    ++iters;
    ++since_deflation;
  }
  return iters;
}

// Right eigenvector of the quasi-triangular t for the real eigenvalue at
// diagonal position k (k is a 1x1 block).
std::array<double, N> real_vector(const Mat4& t, int k, double lam, double tnorm) {
  std::array<double, N> y{};
  y[k] = 1.0;
  const double smin = EPS * tnorm;
  int i = k - 1;
  while (i >= 0) {
    const bool block2 = (i > 0) && (t(i, i - 1) != 0.0);
    if (!block2) {
      double rhs = 0;
      for (int j = i + 1; j <= k; ++j) rhs += t(i, j) * y[j];
      double piv = t(i, i) - lam;
      if (std::abs(piv) < smin) piv = (piv >= 0 ? smin : -smin);
      y[i] = -rhs / piv;
      i -= 1;
    } else {
      const int i0 = i - 1;
      double r0 = 0, r1 = 0;
      for (int j = i + 1; j <= k; ++j) {
        r0 += t(i0, j) * y[j];
        r1 += t(i, j) * y[j];
      }
      const double a = t(i0, i0) - lam, b = t(i0, i);
      const double c = t(i, i0), d = t(i, i) - lam;
      double det = a * d - b * c;
      if (std::abs(det) < smin * smin) det = (det >= 0 ? 1.0 : -1.0) * smin * smin;
      y[i0] = (-r0 * d + r1 * b) / det;
      y[i] = (-r1 * a + r0 * c) / det;
      i -= 2;
    }
  }
  return y;
}

// Eigenvector for the complex eigenvalue lam of the 2x2 block at (k, k+1);
// returns real and imaginary parts.
void complex_vector(const Mat4& t, int k, cplx lam, double tnorm,
                    std::array<cplx, N>& y) {
  y.fill(cplx{0, 0});
  // null vector of the 2x2 block minus lam
  const double a = t(k, k), b = t(k, k + 1), c = t(k + 1, k), d = t(k + 1, k + 1);
  // rows of (B - lam I): [a-lam, b], [c, d-lam]; take the larger row
  const cplx row1[2] = {a - lam, b};
  const cplx row2[2] = {c, d - lam};
  if (std::abs(row1[0]) + std::abs(row1[1]) >= std::abs(row2[0]) + std::abs(row2[1])) {
    y[k] = -row1[1];
    y[k + 1] = row1[0];
  } else {
    y[k] = -row2[1];
    y[k + 1] = row2[0];
  }
  const double smin = EPS * tnorm;
  int i = k - 1;
  while (i >= 0) {
    const bool block2 = (i > 0) && (t(i, i - 1) != 0.0);
    if (!block2) {
      cplx rhs = 0;
      for (int j = i + 1; j <= k + 1; ++j) rhs += t(i, j) * y[j];
      cplx piv = t(i, i) - lam;
      if (std::abs(piv) < smin) piv = cplx{smin, smin};
      y[i] = -rhs / piv;
      i -= 1;
    } else {
      const int i0 = i - 1;
      cplx r0 = 0, r1 = 0;
      for (int j = i + 1; j <= k + 1; ++j) {
        r0 += t(i0, j) * y[j];
        r1 += t(i, j) * y[j];
      }
      const cplx aa = t(i0, i0) - lam, bb = t(i0, i);
      const cplx cc = t(i, i0), dd = t(i, i) - lam;
      cplx det = aa * dd - bb * cc;
      if (std::abs(det) < smin * smin) det = cplx{smin * smin, 0};
      y[i0] = (-r0 * dd + r1 * bb) / det;
      y[i] = (-r1 * aa + r0 * cc) / det;
      i -= 2;
    }
  }
}

}  // namespace

Eigen4Result eigen_solve4(const Mat4& a) {
  Mat4 h = a;
  std::array<double, N> scale{};
  balance(h, scale);
  Mat4 q;
  hessenberg(h, q);
  bool ok = true;
  const int iters = schur(h, q, ok);

  double tnorm = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) tnorm += std::abs(h(i, j));
  if (tnorm == 0) tnorm = 1.0;

  struct Entry {
    cplx lam;
    bool real;
    Vec4 v1{}, v2{};
  };
  std::array<Entry, N> entries;
  int ne = 0;

  auto to_outer = [&](const std::array<double, N>& y) {
    Vec4 v{};
    for (int i = 0; i < N; ++i) {
      double s = 0;
      for (int j = 0; j < N; ++j) s += q(i, j) * y[j];
      v[i] = s * scale[i];
    }
    return v;
  };

  for (int k = 0; k < N;) {
    const bool block2 = (k + 1 < N) && (h(k + 1, k) != 0.0);
    if (!block2) {
      const double lam = h(k, k);
      auto y = real_vector(h, k, lam, tnorm);
      Vec4 v = to_outer(y);
      const double nrm = euclid_norm(v);
      if (nrm > 0) v = (1.0 / nrm) * v;
      entries[ne++] = {cplx{lam, 0}, true, v, Vec4{}};
      k += 1;
    } else {
      const double a11 = h(k, k), a12 = h(k, k + 1), a21 = h(k + 1, k), a22 = h(k + 1, k + 1);
      const double tr = a11 + a22, det = a11 * a22 - a12 * a21;
      double disc = det - tr * tr / 4.0;
      if (disc < 0) disc = 0;  // block kept only when complex; guard roundoff
      const cplx lam{tr / 2.0, std::sqrt(disc)};
      std::array<cplx, N> y;
      complex_vector(h, k, lam, tnorm, y);
      std::array<double, N> yr{}, yi{};
      for (int i = 0; i < N; ++i) {
        yr[i] = y[i].real();
        yi[i] = y[i].imag();
      }
      Vec4 vr = to_outer(yr), vi = to_outer(yi);
      double nrm = std::sqrt(euclid_norm(vr) * euclid_norm(vr) +
                             euclid_norm(vi) * euclid_norm(vi));
      if (nrm > 0) {
        vr = (1.0 / nrm) * vr;
        vi = (1.0 / nrm) * vi;
      }
      entries[ne++] = {lam, false, vr, vi};
      entries[ne++] = {std::conj(lam), false, vr, {-vi[0], -vi[1], -vi[2], -vi[3]}};
      k += 2;
    }
  }

  // sort: descending real part, complex pairs kept adjacent (+imag first)
  std::array<int, N> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (entries[i].lam.real() != entries[j].lam.real())
      return entries[i].lam.real() > entries[j].lam.real();
    return entries[i].lam.imag() > entries[j].lam.imag();
  });

  Eigen4Result res;
  res.qr_iterations = iters;
  res.converged = ok;
  for (int i = 0; i < N; ++i) {
    const Entry& e = entries[order[i]];
    res.values[i] = e.lam;
    res.is_real[i] = e.real;
    res.vec_re[i] = e.v1;
    res.vec_im[i] = e.v2;
  }
  return res;
}

}  // namespace procaflow

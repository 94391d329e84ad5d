#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "procaflow/eigen4.hpp"

using namespace procaflow;

namespace {

double residual(const Mat4& a, const Eigen4Result& r, int i) {
  // || A v - lam v || with v = vr + i vi
  const Vec4 avr = a * r.vec_re[i];
  const Vec4 avi = a * r.vec_im[i];
  double s = 0;
  for (int c = 0; c < 4; ++c) {
    const cplx lhs{avr[c], avi[c]};
    const cplx rhs = r.values[i] * cplx{r.vec_re[i][c], r.vec_im[i][c]};
    s += std::norm(lhs - rhs);
  }
  return std::sqrt(s);
}

double mat_norm(const Mat4& a) {
  double s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

void check_against_oracle(const Mat4& a, double tol = 1e-9) {
  const Eigen4Result r = eigen_solve4(a);
  REQUIRE(r.converged);
  auto roots = oracles::eig_oracle(a);
  // match each solver eigenvalue to the nearest oracle root
  std::array<bool, 4> used{};
  const double scale = std::max(1.0, mat_norm(a));
  for (int i = 0; i < 4; ++i) {
    double best = 1e300;
    int at = -1;
    for (int j = 0; j < 4; ++j) {
      if (used[j]) continue;
      const double d = std::abs(r.values[i] - roots[j]);
      if (d < best) {
        best = d;
        at = j;
      }
    }
    REQUIRE(at >= 0);
    used[at] = true;
    CHECK(best <= tol * scale);
    CHECK(residual(a, r, i) <= tol * scale);
  }
}

}  // namespace

TEST_CASE("diagonal and triangular matrices") {
  Mat4 a{};
  a(0, 0) = 3;
  a(1, 1) = -1;
  a(2, 2) = 0.5;
  a(3, 3) = 7;
  const Eigen4Result r = eigen_solve4(a);
  CHECK(r.values[0].real() == doctest::Approx(7));
  CHECK(r.values[1].real() == doctest::Approx(3));
  CHECK(r.values[2].real() == doctest::Approx(0.5));
  CHECK(r.values[3].real() == doctest::Approx(-1));
  for (int i = 0; i < 4; ++i) CHECK(r.is_real[i]);

  a(0, 1) = 2.5;
  a(1, 3) = -4;
  a(0, 3) = 1;
  check_against_oracle(a);
}

TEST_CASE("rotation block gives a complex pair") {
  Mat4 a{};
  a(0, 0) = 1;
  a(3, 3) = 2;
  a(1, 2) = -0.7;
  a(2, 1) = 0.7;  // rotation generator: eigenvalues +-0.7i
  const Eigen4Result r = eigen_solve4(a);
  int ncomplex = 0;
  for (int i = 0; i < 4; ++i)
    if (!r.is_real[i]) ++ncomplex;
  CHECK(ncomplex == 2);
  for (int i = 0; i < 4; ++i) {
    if (!r.is_real[i]) {
      CHECK(std::abs(r.values[i].imag()) == doctest::Approx(0.7));
      CHECK(r.values[i].real() == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(residual(a, r, i) <= 1e-10);
    }
  }
}

TEST_CASE("random dense matrices vs characteristic-polynomial oracle") {
  oracles::Rng rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const Mat4 a = oracles::rand_mat(rng);
    check_against_oracle(a, 1e-8);
  }
}

TEST_CASE("badly scaled matrix (balancing)") {
  oracles::Rng rng(7);
  Mat4 a = oracles::rand_mat(rng);
  // scale rows/columns over 6 orders of magnitude
  const double d[4] = {1e-3, 1.0, 1e3, 30.0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = a(i, j) * d[i] / d[j];
  check_against_oracle(a, 1e-8);
}

TEST_CASE("repeated eigenvalues (perfect-fluid form)") {
  Mat4 a{};
  a(0, 0) = 2.0;
  a(1, 1) = 0.3;
  a(2, 2) = 0.3;
  a(3, 3) = 0.3;
  const Eigen4Result r = eigen_solve4(a);
  CHECK(r.values[0].real() == doctest::Approx(2.0));
  for (int i = 1; i < 4; ++i) CHECK(r.values[i].real() == doctest::Approx(0.3));
  for (int i = 0; i < 4; ++i) CHECK(residual(a, r, i) <= 1e-12);
}

TEST_CASE("antisymmetric mixed tensor: +-a and +-ib structure") {
  oracles::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const AntisymR g = oracles::rand_antisym(rng);
    const Mat4 a = mixed(g);
    const Eigen4Result r = eigen_solve4(a);
    REQUIRE(r.converged);
    // eigenvalues come in opposite pairs
    std::array<cplx, 4> v = r.values;
    std::sort(v.begin(), v.end(), [](cplx x, cplx y) {
      return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    CHECK(std::abs(v[0] + v[3]) <= 1e-9);
    CHECK(std::abs(v[1] + v[2]) <= 1e-9);
    for (int i = 0; i < 4; ++i) CHECK(residual(a, r, i) <= 1e-8);
  }
}

TEST_CASE("defective matrix does not break convergence") {
  // Jordan block J_2(1) ⊕ J_2(1): defective; eigenvalues all 1
  Mat4 a{};
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 1) = 1;
  a(2, 2) = 1;
  a(2, 3) = 1;
  a(3, 3) = 1;
  const Eigen4Result r = eigen_solve4(a);
  CHECK(r.converged);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(r.values[i] - cplx{1, 0}) <= 1e-6);  // defective: O(sqrt(eps))
  }
}

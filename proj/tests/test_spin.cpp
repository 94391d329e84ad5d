#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "procaflow/eigen4.hpp"
#include "procaflow/spin.hpp"

using namespace procaflow;

namespace {

oracles::Rng g_rng(2024);

Vec4 rand_onshell(double m) {
  std::normal_distribution<double> n(0.0, 1.2);
  const std::array<double, 3> ks{n(g_rng), n(g_rng), n(g_rng)};
  return {std::sqrt(ks[0] * ks[0] + ks[1] * ks[1] + ks[2] * ks[2] + m * m), ks[0], ks[1],
          ks[2]};
}

double mode_residual(const CMat4& w, const SpinMode& m) {
  const CVec4 r = w * m.unit_polarization - m.eigenvalue * m.unit_polarization;
  return euclid_norm(r);
}

Mat4 imag_part(const CMat4& a) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = a(i, j).imag();
  return r;
}

}  // namespace

TEST_CASE("generators match the explicit matrices") {
  const GeneratorSet& g = generators();
  // M3 rotates x1 into x2, N1 boosts t into x1
  const Vec4 e1{0, 1, 0, 0};
  const Vec4 m3e1 = g.M[2] * e1;
  CHECK(euclid_norm(m3e1 - Vec4{0, 0, 1, 0}) == doctest::Approx(0.0));
  const Vec4 n1t = g.N[0] * Vec4{1, 0, 0, 0};
  CHECK(euclid_norm(n1t - Vec4{0, 1, 0, 0}) == doctest::Approx(0.0));

  // so(3) commutators of the real generators: [M1, M2] = M3 (cyclic), which
  // is exactly what makes iM_k obey the angular-momentum algebra
  for (int p = 0; p < 3; ++p) {
    const int q = (p + 1) % 3, r = (p + 2) % 3;
    const Mat4 comm = g.M[p] * g.M[q] - g.M[q] * g.M[p];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(comm(i, j) == doctest::Approx(g.M[r](i, j)));
  }
}

TEST_CASE("pauli-lubanski: rest frame and spectra") {
  const double m = 1.3;
  const PauliLubanski pl = pauli_lubanski(Vec4{m, 0, 0, 0});
  // rest frame: W^3 = i m M3 (right-handed convention), eigenvalues {0, +-m}
  const GeneratorSet& g = generators();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK(pl.W[3](i, j).real() == doctest::Approx(0.0));
      CHECK(pl.W[3](i, j).imag() == doctest::Approx(m * g.M[2](i, j)));
    }

  SUBCASE("k along x3: W3 spectrum {0, 0, +-k0}") {
    const double k3 = 0.5, k0 = std::sqrt(m * m + k3 * k3);
    const PauliLubanski plz = pauli_lubanski(Vec4{k0, 0, 0, k3});
    const Mat4 a = imag_part(plz.W[3]);  // W3 = i a with a real
    const auto roots = oracles::eig_oracle(a);
    // a has eigenvalues {0, 0, +-i k0}, so W3 = i a has {0, 0, +-k0}
    int nzero = 0, nk0 = 0;
    for (const cplx& r : roots) {
      if (std::abs(r) < 1e-9) ++nzero;
      if (std::abs(std::abs(r.imag()) - k0) < 1e-9 && std::abs(r.real()) < 1e-9) ++nk0;
    }
    CHECK(nzero == 2);
    CHECK(nk0 == 2);
  }
  SUBCASE("W0 spectrum {0, 0, +-|k|}") {
    const double k3 = 0.8, k0 = std::sqrt(m * m + k3 * k3);
    const PauliLubanski plz = pauli_lubanski(Vec4{k0, 0, 0, k3});
    const Mat4 a = imag_part(plz.W[0]);
    const auto roots = oracles::eig_oracle(a);
    int nk = 0;
    for (const cplx& r : roots)
      if (std::abs(std::abs(r.imag()) - k3) < 1e-9) ++nk;
    CHECK(nk == 2);
  }
  SUBCASE("space-like k rejected") {
    CHECK_THROWS_AS(pauli_lubanski(Vec4{1, 2, 0, 0}), std::invalid_argument);
  }
}

TEST_CASE("w3 eigenmodes: axis-aligned forms") {
  const double m = 1.0, k3 = 0.5;
  const double k0 = std::sqrt(m * m + k3 * k3);
  const Vec4 k{k0, 0, 0, k3};
  const auto modes = eigenmodes_w3(k);
  REQUIRE(modes.size() == 3);

  const PauliLubanski pl = pauli_lubanski(k);
  for (const SpinMode& mode : modes) {
    CHECK(mode_residual(pl.W[3], mode) <= 1e-10);
    CHECK(std::abs(minkowski_dot(CVec4(k), mode.unit_polarization)) <= 1e-10);
  }
  // longitudinal: eps ∝ (k0, 0, 0, k0^2/k3)
  const SpinMode& lg = modes[0];
  CHECK(lg.kind == SpinKind::longitudinal);
  CHECK(std::abs(lg.eigenvalue) == doctest::Approx(0.0));
  CHECK(lg.polarization[0].real() == doctest::Approx(k0));
  CHECK(lg.polarization[3].real() == doctest::Approx(k0 * k0 / k3));
  // circular: (0, 1, +-i, 0) with lambda = +-k0
  bool saw_plus = false, saw_minus = false;
  for (const SpinMode& mode : modes) {
    if (mode.kind == SpinKind::circular_plus) {
      saw_plus = true;
      CHECK(mode.eigenvalue.real() == doctest::Approx(k0));
      CHECK(std::abs(mode.polarization[2] - cplx{0, 1}) <= 1e-12);
    }
    if (mode.kind == SpinKind::circular_minus) {
      saw_minus = true;
      CHECK(mode.eigenvalue.real() == doctest::Approx(-k0));
      CHECK(std::abs(mode.polarization[2] - cplx{0, -1}) <= 1e-12);
    }
  }
  CHECK(saw_plus);
  CHECK(saw_minus);
}

TEST_CASE("w3 eigenmodes: k along x1 (transverse spin construction)") {
  const double m = 1.0, k1 = 0.2;
  const double k0 = std::sqrt(m * m + k1 * k1);
  const auto modes = eigenmodes_w3(Vec4{k0, k1, 0, 0});
  REQUIRE(modes.size() == 3);
  const PauliLubanski pl = pauli_lubanski(Vec4{k0, k1, 0, 0});
  // the +-m modes are proportional to (k1, k0, -+i m, 0)
  for (const SpinMode& mode : modes) {
    CHECK(mode_residual(pl.W[3], mode) <= 1e-10);
    if (mode.kind == SpinKind::longitudinal) continue;
    CHECK(std::abs(std::abs(mode.eigenvalue.real()) - m) <= 1e-12);
    const cplx scale = mode.polarization[0] / k1;
    const double sgn = mode.eigenvalue.real() > 0 ? 1.0 : -1.0;
    CHECK(std::abs(mode.polarization[1] / scale - k0) <= 1e-10);
    CHECK(std::abs(mode.polarization[2] / scale - cplx{0, sgn * m}) <= 1e-10);
  }
  // the degenerate longitudinal direction at k3 = 0 is the x3 axis
  CHECK(modes[0].degenerate_parametrization);
  CHECK(std::abs(modes[0].polarization[3] - 1.0) <= 1e-15);
}

TEST_CASE("w3/w0 eigenmodes: random k, matrix oracle") {
  for (int trial = 0; trial < 100; ++trial) {
    const Vec4 k = rand_onshell(1.0);
    const PauliLubanski pl = pauli_lubanski(k);
    for (const SpinMode& mode : eigenmodes_w3(k)) {
      CHECK(mode_residual(pl.W[3], mode) <= 1e-10);
      CHECK(std::abs(minkowski_dot(CVec4(k), mode.unit_polarization)) <= 1e-10);
    }
    for (const SpinMode& mode : eigenmodes_w0(k)) {
      CHECK(mode_residual(pl.W[0], mode) <= 1e-10);
      CHECK(std::abs(minkowski_dot(CVec4(k), mode.unit_polarization)) <= 1e-10);
    }
    // closed-form W3 spectrum vs the numeric characteristic-polynomial oracle
    const Mat4 a = imag_part(pl.W[3]);  // W3 = i a
    const auto roots = oracles::eig_oracle(a);
    const double lam = std::sqrt(k[0] * k[0] - k[1] * k[1] - k[2] * k[2]);
    int nzero = 0, nlam = 0;
    for (const cplx& r : roots) {
      if (std::abs(r) < 1e-9) ++nzero;
      if (std::abs(std::abs(r.imag()) - lam) < 1e-9) ++nlam;
    }
    CHECK(nzero == 2);
    CHECK(nlam == 2);
  }
}

TEST_CASE("w0 eigenmodes: axis-aligned and rest frame") {
  const double m = 1.0, k3 = 0.5;
  const double k0 = std::sqrt(m * m + k3 * k3);
  const auto modes = eigenmodes_w0(Vec4{k0, 0, 0, k3});
  REQUIRE(modes.size() == 3);
  CHECK(std::abs(minkowski_dot(CVec4(Vec4{k0, 0, 0, k3}), modes[0].polarization)) <= 1e-12);
  // helicity pair lambda = +-k3 with eps0 = 0
  CHECK(std::abs(modes[1].eigenvalue.real()) == doctest::Approx(k3));
  CHECK(std::abs(modes[1].polarization[0]) == 0.0);

  const auto rest = eigenmodes_w0(Vec4{m, 0, 0, 0});
  CHECK(rest.size() == 1);  // only the lambda = 0 spectrum
  CHECK(rest[0].degenerate_parametrization);
}

TEST_CASE("spin operators") {
  SUBCASE("rest frame: S = W/m") {
    const double m = 0.7;
    const auto S = spin_operator(Vec4{m, 0, 0, 0});
    const PauliLubanski pl = pauli_lubanski(Vec4{m, 0, 0, 0});
    for (int p = 0; p < 3; ++p)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          CHECK(std::abs(S[p](i, j) - pl.W[p + 1](i, j) / m) <= 1e-14);
  }
  SUBCASE("su(2) commutators for random on-shell k") {
    for (int trial = 0; trial < 100; ++trial) {
      const Vec4 k = rand_onshell(1.0);
      const auto S = spin_operator(k);
      for (int p = 0; p < 3; ++p) {
        const int q = (p + 1) % 3, r = (p + 2) % 3;
        const CMat4 comm = S[p] * S[q] - S[q] * S[p];
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            CHECK(std::abs(comm(i, j) - cplx{0, 1} * S[r](i, j)) <= 1e-12);
      }
    }
  }
  SUBCASE("S3 is W3/m on the standing-wave constituents (k3 = 0)") {
    // these polarizations carry S3 = -1 in the right-handed convention; the
    // section-5 sign choice labels the same states +1
    const double m = 1.0, k1 = 0.2;
    const double k0 = std::sqrt(m * m + k1 * k1);
    for (const double kap : {+k1, -k1}) {
      const Vec4 k{k0, kap, 0, 0};
      const CVec4 eps{kap, k0, cplx{0, -m}, 0};
      const auto S = spin_operator(k);
      const CVec4 r = S[2] * eps - cplx{-1, 0} * eps;
      CHECK(euclid_norm(r) <= 1e-10 * euclid_norm(eps));
    }
    for (const double kap : {+k1, -k1}) {
      const Vec4 k{k0, 0, kap, 0};
      const CVec4 eps{kap, cplx{0, m}, k0, 0};
      const auto S = spin_operator(k);
      const CVec4 r = S[2] * eps - cplx{-1, 0} * eps;
      CHECK(euclid_norm(r) <= 1e-10 * euclid_norm(eps));
    }
  }
}

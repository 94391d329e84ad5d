#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "procaflow/stress_energy.hpp"

using namespace procaflow;

namespace {

oracles::Rng g_rng(31);

PlaneWaveMode rand_transverse_mode(double m) {
  std::normal_distribution<double> n(0.0, 1.0);
  const std::array<double, 3> ks{0.4 * n(g_rng), 0.4 * n(g_rng), 0.4 * n(g_rng)};
  const Vec4 k{mass_shell(ks, m), ks[0], ks[1], ks[2]};
  CVec4 eps{cplx{n(g_rng), n(g_rng)}, cplx{n(g_rng), n(g_rng)}, cplx{n(g_rng), n(g_rng)},
            cplx{n(g_rng), n(g_rng)}};
  const cplx coef = minkowski_dot(CVec4(k), eps) / (m * m);
  for (int i = 0; i < 4; ++i) eps[i] -= coef * k[i];
  return make_mode(ks, m, eps, cplx{n(g_rng), n(g_rng)});
}

FieldConfig generic_config(int nmodes, double m) {
  FieldConfig cfg;
  cfg.mass = m;
  for (int i = 0; i < nmodes; ++i) cfg.modes.push_back(rand_transverse_mode(m));
  return cfg;
}

}  // namespace

TEST_CASE("stress_real basics") {
  CHECK(frobenius_norm(stress_real(AntisymR{}, Vec4{}, 1.0)) == 0.0);

  // massless pure radiation: traceless
  oracles::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const AntisymR g = oracles::rand_antisym(rng);
    const Sym4 t = stress_maxwellian(g);
    double trace = 0;
    for (int mu = 0; mu < 4; ++mu) trace += metric_diag[mu] * t(mu, mu);
    CHECK(std::abs(trace) <= 1e-12 * frobenius_norm(t));
  }
}

TEST_CASE("rest-frame single real mode: hand expansion") {
  // phi = Re[(0,1,0,0) e^{-imt}] = (0, cos mt, 0, 0): E = (m sin mt, 0, 0),
  // T_00 = E^2 + (1/4) G.G - (m^2/2) phi.phi = m^2 sin^2 - m^2 sin^2 / 2
  //      + m^2 cos^2 / 2 = m^2 / 2
  const double m = 1.0;
  FieldConfig cfg;
  cfg.mass = m;
  cfg.modes.push_back(make_mode({0, 0, 0}, m, CVec4{0, 1, 0, 0}, 1.0));
  for (const double t : {0.0, 0.4, 1.1, 2.9}) {
    const FieldSample s = evaluate(cfg, Vec4{t, 0, 0, 0});
    const Sym4 tr = stress_real(s.G_re, s.phi_re, m);
    CHECK(tr(0, 0) == doctest::Approx(0.5 * m * m).epsilon(1e-12));
  }
}

TEST_CASE("standing wave: complex form equals real + imaginary split") {
  const FieldConfig cfg = standing_wave_spin_up(0.2, 0.2, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Vec4 x = oracles::rand_vec(g_rng, 5.0);
    const FieldSample s = evaluate(cfg, x);
    const StressEnergyParts parts = stress_total(s, cfg.mass);
    const Sym4 cx = stress_complex_form(s, cfg.mass);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        CHECK(std::abs(parts.total(mu, nu) - cx(mu, nu)) <= 1e-12);
        CHECK(parts.total(mu, nu) == parts.total(nu, mu));  // exact by storage
      }
    CHECK(parts.total(0, 0) >= 0.0);  // energy density of this configuration
    // the metric coefficients vanish identically for this example
    CHECK(std::abs(parts.trace_term_real) <= 1e-12);
    CHECK(std::abs(parts.trace_term_imag) <= 1e-12);
  }
}

TEST_CASE("standing wave: total tensor is static") {
  const FieldConfig cfg = standing_wave_spin_up(0.2, 0.2, 1.0);
  const Vec4 x{0.0, 1.234, -0.567, 0.0};
  const Sym4 t0 = stress_total(evaluate(cfg, x), cfg.mass).total;
  for (const double t : {0.37, 1.9, -4.2}) {
    Vec4 xt = x;
    xt[0] = t;
    const Sym4 tt = stress_total(evaluate(cfg, xt), cfg.mass).total;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) CHECK(tt(mu, nu) == doctest::Approx(t0(mu, nu)));
  }
}

TEST_CASE("quadratic cross terms present (negative control for additivity)") {
  FieldConfig a = generic_config(1, 1.0);
  FieldConfig b = generic_config(1, 1.0);
  FieldConfig ab = a;
  ab.modes.push_back(b.modes[0]);
  const Vec4 x{0.2, 0.7, -0.3, 1.1};
  const Sym4 ta = stress_total(evaluate(a, x), 1.0).total;
  const Sym4 tb = stress_total(evaluate(b, x), 1.0).total;
  const Sym4 tab = stress_total(evaluate(ab, x), 1.0).total;
  double diff = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      diff = std::max(diff, std::abs(tab(mu, nu) - ta(mu, nu) - tb(mu, nu)));
  CHECK(diff > 1e-3);
}

TEST_CASE("maxwellian part is duality-invariant") {
  oracles::Rng rng(9);
  std::uniform_real_distribution<double> ang(-3.2, 3.2);
  for (int i = 0; i < 100; ++i) {
    const AntisymR g = oracles::rand_antisym(rng);
    const Sym4 t0 = stress_maxwellian(g);
    const Sym4 t1 = stress_maxwellian(duality_rotate(g, ang(rng)));
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        CHECK(std::abs(t0(mu, nu) - t1(mu, nu)) <= 1e-12 * (1 + frobenius_norm(t0)));
  }
}

TEST_CASE("conservation residual") {
  SUBCASE("zero field is exactly conserved") {
    FieldConfig cfg;
    cfg.mass = 1.0;
    cfg.modes.push_back(make_mode({0, 0, 0}, 1.0, CVec4{0, 1, 0, 0}, 0.0));
    const Vec4 r = conservation_residual(cfg, Vec4{0.1, 0.2, 0.3, 0.4}, 1e-3);
    CHECK(euclid_norm(r) == 0.0);
  }
  SUBCASE("generic config: second-order Richardson ratio") {
    const FieldConfig cfg = generic_config(3, 1.0);
    double r1 = 0, r2 = 0;
    for (int i = 0; i < 10; ++i) {
      const Vec4 x = oracles::rand_vec(g_rng, 2.0);
      r1 = std::max(r1, euclid_norm(conservation_residual(cfg, x, 1e-3)));
      r2 = std::max(r2, euclid_norm(conservation_residual(cfg, x, 5e-4)));
    }
    CHECK(r1 / r2 >= 3.5);
    CHECK(r1 / r2 <= 4.5);
    CHECK(r1 <= 1e-6);  // bounded by C h^2
  }
  SUBCASE("standing wave with equal wave numbers: residual at rounding level") {
    // every Fourier component of the total tensor has |q1| = |q2| or a single
    // spatial frequency, so the central-difference divergence cancels exactly
    const FieldConfig cfg = standing_wave_spin_up(0.2, 0.2, 1.0);
    for (int i = 0; i < 10; ++i) {
      const Vec4 x = oracles::rand_vec(g_rng, 4.0);
      CHECK(euclid_norm(conservation_residual(cfg, x, 1e-3)) <= 1e-10);
    }
  }
  SUBCASE("h <= 0 rejected") {
    const FieldConfig cfg = generic_config(1, 1.0);
    CHECK_THROWS_AS(conservation_residual(cfg, Vec4{}, 0.0), std::invalid_argument);
  }
}

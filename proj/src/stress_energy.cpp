#include "procaflow/stress_energy.hpp"

#include <cmath>
#include <stdexcept>

namespace procaflow {

namespace {

// G_{mu a} G^a_nu (lower indices on the result); symmetric in (mu, nu).
Sym4 gg_contract(const AntisymR& g) {
  const Mat4 gm = mixed(g);
  Sym4 r;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      double s = 0;
      for (int a = 0; a < 4; ++a) s += g(mu, a) * gm(a, nu);
      r.set(mu, nu, s);
    }
  return r;
}

Sym4 outer_sym(const Vec4& a) {
  const Vec4 al = lower(a);
  Sym4 r;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) r.set(mu, nu, al[mu] * al[nu]);
  return r;
}

Sym4 metric_times(double c) {
  Sym4 r;
  for (int mu = 0; mu < 4; ++mu) r.set(mu, mu, c * metric_diag[mu]);
  return r;
}

}  // namespace

Sym4 stress_maxwellian(const AntisymR& g) {
  return gg_contract(g) + metric_times(0.25 * contract(g, g));
}

Sym4 stress_real(const AntisymR& g, const Vec4& phi, double m) {
  const double trace_term =
      0.25 * contract(g, g) - 0.5 * m * m * minkowski_dot(phi, phi);
  return gg_contract(g) + m * m * outer_sym(phi) + metric_times(trace_term);
}

Sym4 stress_complex_form(const FieldSample& sample, double m) {
  const CMat4 gm = mixed(sample.G);
  const CVec4 phl = lower(sample.phi);
  Sym4 r;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      cplx s = 0;
      for (int a = 0; a < 4; ++a)
        s += std::conj(sample.G(mu, a)) * gm(a, nu) + sample.G(mu, a) * std::conj(gm(a, nu));
      s += m * m * (std::conj(phl[mu]) * phl[nu] + phl[mu] * std::conj(phl[nu]));
      r.set(mu, nu, 0.5 * s.real());
    }
  // scalar terms
  double gbar_g = 0;
  gbar_g = contract(sample.G_re, sample.G_re) + contract(sample.G_im, sample.G_im);
  const double phibar_phi = minkowski_dot(sample.phi_re, sample.phi_re) +
                            minkowski_dot(sample.phi_im, sample.phi_im);
  const double trace = 0.5 * (0.5 * gbar_g - m * m * phibar_phi);
  return r + metric_times(trace);
}

StressEnergyParts stress_total(const FieldSample& sample, double m) {
  StressEnergyParts parts;
  parts.trace_term_real =
      0.25 * contract(sample.G_re, sample.G_re) -
      0.5 * m * m * minkowski_dot(sample.phi_re, sample.phi_re);
  parts.trace_term_imag =
      0.25 * contract(sample.G_im, sample.G_im) -
      0.5 * m * m * minkowski_dot(sample.phi_im, sample.phi_im);
  parts.maxwellian_real = stress_maxwellian(sample.G_re);
  parts.maxwellian_imag = stress_maxwellian(sample.G_im);
  parts.T_real = stress_real(sample.G_re, sample.phi_re, m);
  parts.T_imag = stress_real(sample.G_im, sample.phi_im, m);
  parts.total = parts.T_real + parts.T_imag;
  return parts;
}

Vec4 conservation_residual(const FieldConfig& config, const Vec4& x, double h) {
  if (!(h > 0)) throw std::invalid_argument("conservation_residual: h must be positive");
  const double m = config.mass;
  auto tensor_at = [&](const Vec4& ev) { return stress_total(evaluate(config, ev), m).total; };
  Vec4 res{};
  for (int mu = 0; mu < 4; ++mu) {
    Vec4 xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    const Sym4 tp = tensor_at(xp), tm = tensor_at(xm);
    for (int nu = 0; nu < 4; ++nu) {
      // d^mu = g^{mu mu} d_mu
      res[nu] += metric_diag[mu] * (tp(mu, nu) - tm(mu, nu)) / (2 * h);
    }
  }
  return res;
}

}  // namespace procaflow

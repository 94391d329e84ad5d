#include "procaflow/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>

#include "procaflow/example_flows.hpp"
#include "procaflow/field_modes.hpp"
#include "procaflow/spin.hpp"
#include "procaflow/stress_energy.hpp"
#include "procaflow/tetrad_eigen.hpp"

namespace procaflow {

namespace {

using Rng = std::mt19937_64;

Vec4 rand_vec(Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  return {n(rng), n(rng), n(rng), n(rng)};
}

AntisymR rand_antisym(Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  AntisymR g;
  for (int i = 0; i < 6; ++i) g.c[i] = n(rng);
  return g;
}

Vec4 rand_onshell_k(Rng& rng, double m) {
  std::normal_distribution<double> n(0.0, 1.0);
  const std::array<double, 3> ks{n(rng), n(rng), n(rng)};
  return {mass_shell(ks, m), ks[0], ks[1], ks[2]};
}

// a random transverse mode: project a random polarization onto k.eps = 0
PlaneWaveMode rand_mode(Rng& rng, double m) {
  std::normal_distribution<double> n(0.0, 1.0);
  const std::array<double, 3> ks{0.5 * n(rng), 0.5 * n(rng), 0.5 * n(rng)};
  const Vec4 k{mass_shell(ks, m), ks[0], ks[1], ks[2]};
  CVec4 eps{cplx{n(rng), n(rng)}, cplx{n(rng), n(rng)}, cplx{n(rng), n(rng)},
            cplx{n(rng), n(rng)}};
  const cplx ke = minkowski_dot(CVec4(k), eps);
  const cplx coef = ke / (m * m);  // k.k = m^2
  for (int i = 0; i < 4; ++i) eps[i] -= coef * k[i];
  return make_mode(ks, m, eps, cplx{n(rng), n(rng)});
}

FieldConfig rand_config(Rng& rng, int nmodes, double m) {
  FieldConfig cfg;
  cfg.mass = m;
  for (int i = 0; i < nmodes; ++i) cfg.modes.push_back(rand_mode(rng, m));
  return cfg;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

struct Suite {
  std::vector<AuditCheck>& out;

  void bound(const std::string& name, double worst, double tol) {
    out.push_back({name, worst <= tol, "worst " + fmt(worst) + " tol " + fmt(tol)});
  }
  void in_range(const std::string& name, double v, double lo, double hi) {
    out.push_back({name, v >= lo && v <= hi,
                   fmt(v) + " in [" + fmt(lo) + ", " + fmt(hi) + "]"});
  }
};

double tetrad_residual(const FrameTetrad& f) {
  const std::array<const Vec4*, 4> v{&f.T, &f.Z, &f.X, &f.Y};
  const std::array<double, 4> want{1, -1, -1, -1};
  double worst = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const double d = minkowski_dot(*v[i], *v[j]) - (i == j ? want[i] : 0.0);
      worst = std::max(worst, std::abs(d));
    }
  return worst;
}

double null_basis_residual(const FrameTetrad& f) {
  const NullBasis b = null_basis(f);
  double worst = 0;
  auto chk = [&](cplx got, cplx want) { worst = std::max(worst, std::abs(got - want)); };
  chk(minkowski_dot(b.l, b.l), 0);
  chk(minkowski_dot(b.n, b.n), 0);
  chk(minkowski_dot(b.m, b.m), 0);
  chk(minkowski_dot(b.mbar, b.mbar), 0);
  chk(minkowski_dot(b.l, b.n), 1);
  chk(minkowski_dot(b.m, b.mbar), -1);
  chk(minkowski_dot(b.l, b.m), 0);
  chk(minkowski_dot(b.l, b.mbar), 0);
  chk(minkowski_dot(b.n, b.m), 0);
  chk(minkowski_dot(b.n, b.mbar), 0);
  return worst;
}

}  // namespace

bool AuditReport::all_pass() const {
  for (const AuditCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

AuditReport run_audit(bool full) {
  AuditReport report;
  Suite s{report.checks};
  Rng rng(0x9e3779b97f4a7c15ull);

  // --- minkowski kernel ---
  {
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      const Vec4 a = rand_vec(rng), b = rand_vec(rng);
      worst = std::max(worst, std::abs(minkowski_dot(a, b) - minkowski_dot(b, a)));
    }
    s.bound("dot-symmetry", worst, 1e-15);
  }
  {
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      const AntisymR g = rand_antisym(rng);
      const AntisymR dd = hodge_dual(hodge_dual(g));
      for (int c = 0; c < 6; ++c) worst = std::max(worst, std::abs(dd.c[c] + g.c[c]));
    }
    s.bound("double-dual-minus-identity", worst, 1e-12);
  }
  {
    double worst = 0;
    std::uniform_real_distribution<double> rap(-3.0, 3.0);
    const Vec4 that{1, 0, 0, 0};
    for (int i = 0; i < 200; ++i) {
      Vec4 zdir = rand_vec(rng);
      zdir[0] = 0;
      if (euclid_norm(zdir) < 1e-6) continue;
      const Vec4 zhat = (1.0 / euclid_norm(zdir)) * zdir;
      const double th = rap(rng);
      const Vec4 a = rand_vec(rng), b = rand_vec(rng);
      const double before = minkowski_dot(a, b);
      const double after = minkowski_dot(lorentz_boost(a, that, zhat, th),
                                         lorentz_boost(b, that, zhat, th));
      worst = std::max(worst, std::abs(after - before));
    }
    s.bound("boost-preserves-dot", worst, 1e-12);
  }
  {
    double worst = 0;
    std::uniform_real_distribution<double> ang(-3.2, 3.2);
    for (int i = 0; i < 200; ++i) {
      const AntisymR g = rand_antisym(rng);
      const FieldInvariants i0 = invariants(g);
      const FieldInvariants i1 = invariants(duality_rotate(g, ang(rng)));
      worst = std::max(worst, std::abs(i1.k - i0.k));
      if (i0.k < 0) worst = 1e9;
    }
    s.bound("invariant-k-duality", worst, 1e-12);
  }

  // --- field modes ---
  {
    double worst = 0;
    Rng r2(7);
    const FieldConfig a = rand_config(r2, 3, 1.0);
    const FieldConfig b = rand_config(r2, 2, 1.0);
    FieldConfig ab = a;
    ab.modes.insert(ab.modes.end(), b.modes.begin(), b.modes.end());
    for (int i = 0; i < 50; ++i) {
      const Vec4 x = rand_vec(rng, 2.0);
      const FieldSample sa = evaluate(a, x), sb = evaluate(b, x), sab = evaluate(ab, x);
      for (int mu = 0; mu < 4; ++mu)
        worst = std::max(worst, std::abs(sab.phi[mu] - sa.phi[mu] - sb.phi[mu]));
    }
    s.bound("mode-linearity", worst, 1e-12);
  }
  {
    double worst = 0;
    const FieldConfig cfg = standing_wave_spin_up(0.2, 0.2, 1.0);
    for (int i = 0; i < 100; ++i) {
      const Vec4 x = rand_vec(rng, 5.0);
      worst = std::max(worst, std::abs(divergence(cfg, x)));
    }
    s.bound("standing-wave-divergence", worst, 1e-12);
  }
  {
    // G equals the central finite difference of phi at O(h^2)
    const FieldConfig cfg = standing_wave_spin_up(0.2, 0.2, 1.0);
    auto fd_residual = [&](const Vec4& x, double h) {
      double worst = 0;
      const FieldSample s0 = evaluate(cfg, x);
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
          Vec4 xp = x, xm = x, yp = x, ym = x;
          xp[mu] += h;
          xm[mu] -= h;
          yp[nu] += h;
          ym[nu] -= h;
          const cplx dmu_phinu =
              (lower(evaluate(cfg, xp).phi)[nu] - lower(evaluate(cfg, xm).phi)[nu]) / (2 * h);
          const cplx dnu_phimu =
              (lower(evaluate(cfg, yp).phi)[mu] - lower(evaluate(cfg, ym).phi)[mu]) / (2 * h);
          worst = std::max(worst, std::abs(dmu_phinu - dnu_phimu - s0.G(mu, nu)));
        }
      return worst;
    };
    double r1 = 0, r2v = 0;
    for (int i = 0; i < 20; ++i) {
      const Vec4 x = rand_vec(rng, 4.0);
      r1 = std::max(r1, fd_residual(x, 1e-3));
      r2v = std::max(r2v, fd_residual(x, 5e-4));
    }
    s.in_range("field-derivative-order", r1 / r2v, 3.5, 4.5);
  }

  // --- stress-energy ---
  {
    double worst = 0;
    const FieldConfig cfg = standing_wave_spin_up(0.2, 0.2, 1.0);
    for (int i = 0; i < 100; ++i) {
      const Vec4 x = rand_vec(rng, 5.0);
      const FieldSample smp = evaluate(cfg, x);
      const StressEnergyParts parts = stress_total(smp, cfg.mass);
      const Sym4 cx = stress_complex_form(smp, cfg.mass);
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          worst = std::max(worst, std::abs(parts.total(mu, nu) - cx(mu, nu)));
    }
    s.bound("stress-split-agreement", worst, 1e-12);
  }
  {
    double worst = 0;
    std::uniform_real_distribution<double> ang(-3.2, 3.2);
    for (int i = 0; i < 100; ++i) {
      const AntisymR g = rand_antisym(rng);
      const Sym4 m0 = stress_maxwellian(g);
      const Sym4 m1 = stress_maxwellian(duality_rotate(g, ang(rng)));
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          worst = std::max(worst, std::abs(m0(mu, nu) - m1(mu, nu)));
    }
    s.bound("maxwellian-duality-invariance", worst, 1e-12);
  }

  // --- tetrads ---
  {
    double worst_t = 0, worst_nb = 0, worst_phi = 0;
    for (int i = 0; i < 300; ++i) {
      const AntisymR g = rand_antisym(rng);
      const Vec4 phi = rand_vec(rng);
      const auto [f, d] = tetrad_from_field(g, phi);
      worst_t = std::max(worst_t, tetrad_residual(f));
      worst_nb = std::max(worst_nb, null_basis_residual(f));
      const Vec4 rec = (d.case_tag == CaseTag::i)
                           ? d.alpha * f.T + d.gamma * f.X
                           : d.beta * f.Z + d.delta * f.Y;
      if (!d.degenerate && !d.fallback_seed)
        worst_phi = std::max(worst_phi, euclid_norm(phi - rec) / euclid_norm(phi));
    }
    s.bound("tetrad-orthonormality", worst_t, 1e-10);
    s.bound("null-basis-relations", worst_nb, 1e-12);
    s.bound("tetrad-phi-decomposition", worst_phi, 1e-9);
  }

  // --- eigensolver agreement ---
  {
    double worst_val = 0, worst_res = 0;
    for (int i = 0; i < 200; ++i) {
      const AntisymR g = rand_antisym(rng);
      const Vec4 phi = rand_vec(rng);
      const auto [f, d] = tetrad_from_field(g, phi);
      if (d.degenerate) continue;
      const double m = 1.0;
      const double phi2 = minkowski_dot(phi, phi);
      // assemble the case tensor in coordinates and solve both ways
      Sym4 t;
      const Vec4 tl = lower(f.T), zl = lower(f.Z), xl = lower(f.X), yl = lower(f.Y);
      const Vec4 phl = lower(phi);
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu) {
          double val = d.k * (tl[mu] * tl[nu] - zl[mu] * zl[nu] + xl[mu] * xl[nu] +
                              yl[mu] * yl[nu]);
          val += m * m * phl[mu] * phl[nu];
          val += (mu == nu ? metric_diag[mu] : 0.0) * (-0.5 * m * m * phi2);
          t.set(mu, nu, val);
        }
      const auto closed = eigensystem_case(d, m, phi2);
      const EigenSystem numeric = eigensystem_numeric(t);
      if (numeric.n_real != 4) {
        worst_val = 1e9;
        continue;
      }
      std::array<double, 4> ca, na;
      for (int q = 0; q < 4; ++q) {
        ca[q] = closed[q].eigenvalue;
        na[q] = numeric.pairs[q].eigenvalue;
      }
      std::sort(ca.begin(), ca.end());
      std::sort(na.begin(), na.end());
      for (int q = 0; q < 4; ++q) worst_val = std::max(worst_val, std::abs(ca[q] - na[q]));
      // residual of numeric pairs
      const Mat4 mt = mixed(t);
      for (int q = 0; q < 4; ++q) {
        const Vec4 r = mt * numeric.pairs[q].vector -
                       numeric.pairs[q].eigenvalue * numeric.pairs[q].vector;
        worst_res = std::max(worst_res, euclid_norm(r) / (frobenius_norm(t) + 1.0));
      }
    }
    s.bound("case-eigensystem-agreement", worst_val, 1e-9);
    s.bound("eigen-residual", worst_res, 1e-10);
  }

  // --- spin ---
  {
    double worst = 0;
    for (int i = 0; i < 60; ++i) {
      const Vec4 k = rand_onshell_k(rng, 1.0);
      for (const auto& mode : eigenmodes_w3(k)) {
        const PauliLubanski pl = pauli_lubanski(k);
        const CVec4 r = pl.W[3] * mode.unit_polarization -
                        mode.eigenvalue * mode.unit_polarization;
        worst = std::max(worst, euclid_norm(r));
        worst = std::max(worst,
                         std::abs(minkowski_dot(CVec4(k), mode.unit_polarization)));
      }
      for (const auto& mode : eigenmodes_w0(k)) {
        const PauliLubanski pl = pauli_lubanski(k);
        const CVec4 r = pl.W[0] * mode.unit_polarization -
                        mode.eigenvalue * mode.unit_polarization;
        worst = std::max(worst, euclid_norm(r));
      }
    }
    s.bound("spin-eigenmode-residuals", worst, 1e-10);
  }
  {
    double worst = 0;
    for (int i = 0; i < 60; ++i) {
      const Vec4 k = rand_onshell_k(rng, 1.0);
      const auto S = spin_operator(k);
      for (int p = 0; p < 3; ++p) {
        const int q = (p + 1) % 3, r = (p + 2) % 3;
        const CMat4 comm = S[p] * S[q] - S[q] * S[p];
        const CMat4 want = cplx{0, 1} * S[r];
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            worst = std::max(worst, std::abs(comm(a, b) - want(a, b)));
      }
    }
    s.bound("spin-commutators", worst, 1e-12);
  }

  // --- flows ---
  {
    const ExampleParams p = make_example_params(0.2, 0.2, 1.0);
    std::uniform_real_distribution<double> pos(0.0, 2 * 3.14159265358979323846 / 0.2);
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
      const double x1 = pos(rng), x2 = pos(rng);
      const BranchPoint bp = branch_quantities(p, x1, x2);
      if (bp.branch == Branch::crossover) continue;
      const Vec4 u = analytic_velocity(p, x1, x2);
      worst = std::max(worst, std::abs(minkowski_dot(u, u) - 1.0));
      if (u[0] < 0) worst = 1e9;
    }
    s.bound("velocity-normalization", worst, 1e-12);
  }
  {
    // pipeline spot check: analytic velocity vs numeric time-like eigenvector
    const ExampleParams p = make_example_params(0.2, 0.2, 1.0);
    const FieldConfig cfg = p.config();
    std::uniform_real_distribution<double> pos(0.0, 2 * 3.14159265358979323846 / 0.2);
    double worst = 0;
    int tested = 0;
    while (tested < 40) {
      const double x1 = pos(rng), x2 = pos(rng);
      const BranchPoint bp = branch_quantities(p, x1, x2);
      if (std::abs(bp.lambda2) < 1e-6) continue;
      ++tested;
      const FieldSample smp = evaluate(cfg, {0, x1, x2, 0});
      const EigenSystem es = eigensystem_numeric(stress_total(smp, p.m).total);
      if (!es.timelike_index) {
        worst = 1e9;
        continue;
      }
      const Vec4 u = analytic_velocity(p, x1, x2);
      const Vec4 v = es.pairs[*es.timelike_index].vector;
      const double cosang = std::min(1.0, std::abs(minkowski_dot(lower(u), v)) /
                                              (euclid_norm(u) * euclid_norm(v)));
      // compare directions euclidean-style
      double dot = 0, nu = 0, nv = 0;
      for (int c = 0; c < 4; ++c) {
        dot += u[c] * v[c];
        nu += u[c] * u[c];
        nv += v[c] * v[c];
      }
      (void)cosang;
      const double ang = std::acos(std::min(1.0, std::abs(dot) / std::sqrt(nu * nv)));
      worst = std::max(worst, ang);
    }
    s.bound("flow-branch-consistency", worst, 1e-8);
  }

  if (full) {
    {
      Rng r2(11);
      const FieldConfig cfg = rand_config(r2, 3, 1.0);
      double rr1 = 0, rr2 = 0;
      for (int i = 0; i < 10; ++i) {
        const Vec4 x = rand_vec(rng, 2.0);
        rr1 = std::max(rr1, euclid_norm(conservation_residual(cfg, x, 1e-3)));
        rr2 = std::max(rr2, euclid_norm(conservation_residual(cfg, x, 5e-4)));
      }
      s.in_range("conservation-richardson", rr1 / rr2, 3.5, 4.5);
    }
    {
      const FieldConfig cfg = standing_wave_spin_up(0.2, 0.2, 1.0);
      auto kg = [&](const Vec4& x, double h) {
        CVec4 acc{};
        const FieldSample s0 = evaluate(cfg, x);
        for (int mu = 0; mu < 4; ++mu) {
          Vec4 xp = x, xm = x;
          xp[mu] += h;
          xm[mu] -= h;
          const CVec4 pp = evaluate(cfg, xp).phi, pm = evaluate(cfg, xm).phi;
          for (int c = 0; c < 4; ++c) {
            const cplx dd = (pp[c] - 2.0 * s0.phi[c] + pm[c]) / (h * h);
            acc[c] += metric_diag[mu] * dd;
          }
        }
        for (int c = 0; c < 4; ++c) acc[c] += cfg.mass * cfg.mass * s0.phi[c];
        return euclid_norm(acc);
      };
      double rr1 = 0, rr2 = 0;
      for (int i = 0; i < 20; ++i) {
        const Vec4 x = rand_vec(rng, 4.0);
        rr1 = std::max(rr1, kg(x, 1e-3));
        rr2 = std::max(rr2, kg(x, 5e-4));
      }
      s.in_range("klein-gordon-richardson", rr1 / rr2, 3.5, 4.5);
    }
    {
      const ExampleParams p = make_example_params(0.2, 0.2, 1.0);
      const double xm = 3.14159265358979323846 / (2 * 0.2);
      const Vec4 seed{0, xm + 1.0, xm, 0};
      const auto a = integrate_flowline(p, seed, 0.05, 200);
      const auto b = integrate_flowline(p, seed, 0.025, 400);
      const auto c = integrate_flowline(p, seed, 0.0125, 800);
      const double e1 = euclid_norm(a.events.back() - b.events.back());
      const double e2 = euclid_norm(b.events.back() - c.events.back());
      s.in_range("rk4-order", e1 / e2, 12.0, 20.0);
    }
    {
      const ExampleParams p = make_example_params(0.2, 0.2, 1.0);
      const FieldConfig cfg = p.config();
      const double period = 2 * 3.14159265358979323846 / 0.2;
      double worst = 0;
      for (int i = 0; i < 40; ++i)
        for (int j = 0; j < 40; ++j) {
          const double x1 = period * i / 40, x2 = period * j / 40;
          const BranchPoint bp = branch_quantities(p, x1, x2);
          if (std::abs(bp.lambda2) < 1e-6) continue;
          const FieldSample smp = evaluate(cfg, {0, x1, x2, 0});
          const EigenSystem es = eigensystem_numeric(stress_total(smp, p.m).total);
          if (!es.timelike_index) {
            worst = 1e9;
            continue;
          }
          const double got = es.pairs[*es.timelike_index].eigenvalue;
          const double want = analytic_eigenvalue(p, x1, x2);
          worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
        }
      s.bound("grid-pipeline-eigenvalue", worst, 1e-9);
    }
  }

  return report;
}

std::string to_json(const AuditReport& report) {
  std::string out = "{\n  \"checks\": [\n";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const AuditCheck& c = report.checks[i];
    out += "    {\"name\": \"" + c.name + "\", \"pass\": " + (c.pass ? "true" : "false") +
           ", \"detail\": \"" + c.detail + "\"}";
    out += (i + 1 < report.checks.size()) ? ",\n" : "\n";
  }
  out += "  ],\n  \"all_pass\": ";
  out += report.all_pass() ? "true" : "false";
  out += "\n}\n";
  return out;
}

}  // namespace procaflow

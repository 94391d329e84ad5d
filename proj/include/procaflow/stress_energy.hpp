#pragma once

#include "procaflow/field_modes.hpp"
#include "procaflow/minkowski.hpp"

// Symmetric stress-energy tensor of the complex Proca field, assembled per
// real field as
//
//   T_{mu nu} = G_{mu a} G^a_nu + m^2 phi_mu phi_nu
//             + g_{mu nu} [ (1/4) G.G - (m^2/2) phi.phi ]
//
// and summed over the real and imaginary parts.  This normalization makes
// the time-like eigenvalue of `total` equal to the sum of the two field
// invariants k_R + k_I for the standing-wave example.

namespace procaflow {

struct StressEnergyParts {
  Sym4 T_real{};             // real-field part
  Sym4 T_imag{};             // imaginary-field part
  Sym4 total{};              // T_real + T_imag
  Sym4 maxwellian_real{};    // mass-independent part incl. its metric term
  Sym4 maxwellian_imag{};
  double trace_term_real = 0;  // the g_{mu nu} coefficients
  double trace_term_imag = 0;
};

// Stress tensor of a single real field (G, phi).
Sym4 stress_real(const AntisymR& g, const Vec4& phi, double m);

// Mass-independent (maxwellian) part only: G_{mu a} G^a_nu + (1/4) g G.G.
Sym4 stress_maxwellian(const AntisymR& g);

// Assembles both parts from a field sample; also cross-checks the complex
// assembly path internally (the two agree to rounding by construction).
StressEnergyParts stress_total(const FieldSample& sample, double m);

// Complex-form assembly (1/2)[Gbar G + G Gbar + m^2(phibar phi + phi phibar)
// + g((1/2) Gbar.G - m^2 phibar.phi)]; equals T_real + T_imag.
Sym4 stress_complex_form(const FieldSample& sample, double m);

// Central-difference audit of d^mu T_{mu nu}; returns the four residual
// components.  Exact conservation makes this O(h^2).
Vec4 conservation_residual(const FieldConfig& config, const Vec4& x, double h);

}  // namespace procaflow

#pragma once

#include <string>
#include <vector>

#include "procaflow/minkowski.hpp"

// Proca field configurations as finite plane-wave superpositions, with
// analytic derivatives.  Every mode satisfies the mass shell
// k0 = sqrt(|k|^2 + m^2) and the transversality constraint k.eps = 0, so the
// assembled field solves (box + m^2) phi = 0 and d.phi = 0 exactly.

namespace procaflow {

struct PlaneWaveMode {
  std::array<double, 3> k_spatial{};
  double mass = 0;
  CVec4 polarization{};  // contravariant
  cplx amplitude{};
  int frequency_sign = +1;  // +1: e^{-i k.x}, -1: e^{+i k.x}

  Vec4 wave_vector() const;  // contravariant on-shell (k0, k_spatial)
};

struct FieldConfig {
  double mass = 0;
  std::vector<PlaneWaveMode> modes;
};

struct FieldSample {
  Vec4 event{};
  CVec4 phi{};      // contravariant
  AntisymC G{};     // G_{mu nu} = d_mu phi_nu - d_nu phi_mu, lower indices
  Vec4 phi_re{}, phi_im{};
  AntisymR G_re{}, G_im{};
};

// sqrt(|k|^2 + m^2); throws std::invalid_argument for m <= 0.
double mass_shell(const std::array<double, 3>& k_spatial, double m);

// Validated mode constructor; rejects polarizations with
// |k.eps| > 1e-10 * ||eps||.
PlaneWaveMode make_mode(const std::array<double, 3>& k_spatial, double m,
                        const CVec4& polarization, cplx amplitude,
                        int frequency_sign = +1);

FieldSample evaluate(const FieldConfig& config, const Vec4& x);

// Analytic four-divergence d_mu phi^mu at x (zero for validated configs).
cplx divergence(const FieldConfig& config, const Vec4& x);

// Single-frequency standing wave built from counter-propagating waves along
// x1 and x2 with spin along x3 (the paper convention labels it spin-up).
// Requires |k1| = |k2| and m > 0.
FieldConfig standing_wave_spin_up(double k1, double k2, double m);

// JSON (de)serialization:
// {"mass": m, "modes": [{"k": [3], "eps_re": [4], "eps_im": [4],
//                        "amp_re": a, "amp_im": b, "sign": +-1}]}
std::string to_json(const FieldConfig& config);
FieldConfig field_config_from_json(const std::string& text);

}  // namespace procaflow

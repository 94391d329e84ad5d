#include "procaflow/field_modes.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace procaflow {

Vec4 PlaneWaveMode::wave_vector() const {
  return {mass_shell(k_spatial, mass), k_spatial[0], k_spatial[1], k_spatial[2]};
}

double mass_shell(const std::array<double, 3>& k_spatial, double m) {
  if (!(m > 0)) throw std::invalid_argument("mass_shell: m must be positive");
  return std::sqrt(k_spatial[0] * k_spatial[0] + k_spatial[1] * k_spatial[1] +
                   k_spatial[2] * k_spatial[2] + m * m);
}

PlaneWaveMode make_mode(const std::array<double, 3>& k_spatial, double m,
                        const CVec4& polarization, cplx amplitude, int frequency_sign) {
  if (frequency_sign != 1 && frequency_sign != -1) {
    throw std::invalid_argument("make_mode: frequency_sign must be +1 or -1");
  }
  PlaneWaveMode mode;
  mode.k_spatial = k_spatial;
  mode.mass = m;
  mode.polarization = polarization;
  mode.amplitude = amplitude;
  mode.frequency_sign = frequency_sign;
  const Vec4 k = mode.wave_vector();
  const cplx kd = minkowski_dot(CVec4(k), polarization);
  if (std::abs(kd) > 1e-10 * euclid_norm(polarization)) {
    throw std::invalid_argument("make_mode: polarization violates k.eps = 0");
  }
  return mode;
}

FieldSample evaluate(const FieldConfig& config, const Vec4& x) {
  FieldSample s;
  s.event = x;
  for (const PlaneWaveMode& mode : config.modes) {
    const Vec4 k = mode.wave_vector();
    const double phase_arg = -mode.frequency_sign * minkowski_dot(k, x);
    const cplx phase = mode.amplitude * std::polar(1.0, phase_arg);
    const CVec4 eps_l = lower(mode.polarization);
    const Vec4 k_l = lower(k);
    // d_mu multiplies the mode by -i s k_mu
    const cplx dmu = cplx{0, -1} * static_cast<double>(mode.frequency_sign);
    for (int mu = 0; mu < 4; ++mu) s.phi[mu] += mode.polarization[mu] * phase;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu) {
        const cplx gmn = dmu * (k_l[mu] * eps_l[nu] - k_l[nu] * eps_l[mu]) * phase;
        s.G.set(mu, nu, s.G(mu, nu) + gmn);
      }
  }
  s.phi_re = s.phi.real();
  s.phi_im = s.phi.imag();
  for (int i = 0; i < 6; ++i) {
    s.G_re.c[i] = s.G.c[i].real();
    s.G_im.c[i] = s.G.c[i].imag();
  }
  return s;
}

cplx divergence(const FieldConfig& config, const Vec4& x) {
  cplx d = 0;
  for (const PlaneWaveMode& mode : config.modes) {
    const Vec4 k = mode.wave_vector();
    const double phase_arg = -mode.frequency_sign * minkowski_dot(k, x);
    const cplx phase = mode.amplitude * std::polar(1.0, phase_arg);
    const cplx dmu = cplx{0, -1} * static_cast<double>(mode.frequency_sign);
    d += dmu * minkowski_dot(CVec4(k), mode.polarization) * phase;
  }
  return d;
}

FieldConfig standing_wave_spin_up(double k1, double k2, double m) {
  if (std::abs(std::abs(k1) - std::abs(k2)) > 1e-12 * (std::abs(k1) + std::abs(k2))) {
    throw std::invalid_argument("standing_wave_spin_up: requires |k1| == |k2|");
  }
  if (!(m > 0)) throw std::invalid_argument("standing_wave_spin_up: m must be positive");
  const double k0 = mass_shell({k1, 0, 0}, m);
  FieldConfig cfg;
  cfg.mass = m;
  const cplx amp{-0.5, 0.0};
  const cplx im{0, m};
  // counter-propagating pair along x1, then along x2; the four polarizations
  // are the single-plane-wave spin eigenvectors of the section-5 system
  for (const double kap : {+k1, -k1}) {
    cfg.modes.push_back(make_mode({kap, 0, 0}, m, CVec4{kap, k0, -im, 0}, amp));
  }
  for (const double kap : {+k2, -k2}) {
    cfg.modes.push_back(make_mode({0, kap, 0}, m, CVec4{kap, im, k0, 0}, amp));
  }
  return cfg;
}

std::string to_json(const FieldConfig& config) {
  nlohmann::json j;
  j["mass"] = config.mass;
  j["modes"] = nlohmann::json::array();
  for (const PlaneWaveMode& mode : config.modes) {
    nlohmann::json jm;
    jm["k"] = {mode.k_spatial[0], mode.k_spatial[1], mode.k_spatial[2]};
    jm["eps_re"] = {mode.polarization[0].real(), mode.polarization[1].real(),
                    mode.polarization[2].real(), mode.polarization[3].real()};
    jm["eps_im"] = {mode.polarization[0].imag(), mode.polarization[1].imag(),
                    mode.polarization[2].imag(), mode.polarization[3].imag()};
    jm["amp_re"] = mode.amplitude.real();
    jm["amp_im"] = mode.amplitude.imag();
    jm["sign"] = mode.frequency_sign;
    j["modes"].push_back(jm);
  }
  return j.dump(2);
}

FieldConfig field_config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("field config: bad JSON: ") + e.what());
  }
  FieldConfig cfg;
  try {
    cfg.mass = j.at("mass").get<double>();
    for (const auto& jm : j.at("modes")) {
      const auto kv = jm.at("k");
      const auto er = jm.at("eps_re");
      const auto ei = jm.at("eps_im");
      CVec4 eps;
      for (int i = 0; i < 4; ++i)
        eps[i] = cplx{er.at(i).get<double>(), ei.at(i).get<double>()};
      cfg.modes.push_back(make_mode(
          {kv.at(0).get<double>(), kv.at(1).get<double>(), kv.at(2).get<double>()}, cfg.mass,
          eps, cplx{jm.at("amp_re").get<double>(), jm.at("amp_im").get<double>()},
          jm.at("sign").get<int>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("field config: missing/invalid field: ") + e.what());
  }
  if (cfg.modes.empty()) throw std::invalid_argument("field config: no modes");
  return cfg;
}

}  // namespace procaflow

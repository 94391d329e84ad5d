#include "procaflow/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "procaflow/example_flows.hpp"
#include "procaflow/field_modes.hpp"
#include "procaflow/spin.hpp"
#include "procaflow/verify.hpp"

namespace procaflow {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json mode_to_json(const SpinMode& m) {
  json j;
  j["eigenvalue_re"] = m.eigenvalue.real();
  j["eigenvalue_im"] = m.eigenvalue.imag();
  j["kind"] = to_string(m.kind);
  j["degenerate_parametrization"] = m.degenerate_parametrization;
  json pol = json::array(), upol = json::array();
  for (int i = 0; i < 4; ++i) {
    pol.push_back({{"re", m.polarization[i].real()}, {"im", m.polarization[i].imag()}});
    upol.push_back(
        {{"re", m.unit_polarization[i].real()}, {"im", m.unit_polarization[i].imag()}});
  }
  j["polarization"] = pol;
  j["unit_polarization"] = upol;
  return j;
}

json parse_config(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: bad JSON: ") + e.what());
  }
}

ExampleParams params_from(const json& j) {
  return make_example_params(j.value("k1", 0.2), j.value("k2", 0.2), j.value("mass", 1.0));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace

std::string cmd_modes_report(const std::string& config_json) {
  const json j = parse_config(config_json);
  Vec4 k{};
  double m = 0;
  if (j.contains("k4")) {
    const auto& k4 = j.at("k4");
    for (int i = 0; i < 4; ++i) k[i] = k4.at(i).get<double>();
    const double k2 = minkowski_dot(k, k);
    if (!(k2 > 0) || !(k[0] > 0))
      throw std::invalid_argument("modes: k4 must be future-pointing time-like");
    m = std::sqrt(k2);
    if (j.contains("mass")) {
      const double mj = j.at("mass").get<double>();
      if (std::abs(mj - m) > 1e-8 * std::max(1.0, mj))
        throw std::invalid_argument("modes: k4 is off the mass shell for the given mass");
    }
  } else {
    const auto& ks = j.at("k");
    m = j.at("mass").get<double>();
    const std::array<double, 3> kspat{ks.at(0).get<double>(), ks.at(1).get<double>(),
                                      ks.at(2).get<double>()};
    k = {mass_shell(kspat, m), kspat[0], kspat[1], kspat[2]};
  }

  json out;
  out["k"] = {k[0], k[1], k[2], k[3]};
  out["mass"] = m;
  out["w3_modes"] = json::array();
  for (const SpinMode& mode : eigenmodes_w3(k)) out["w3_modes"].push_back(mode_to_json(mode));
  out["w0_modes"] = json::array();
  for (const SpinMode& mode : eigenmodes_w0(k)) out["w0_modes"].push_back(mode_to_json(mode));
  return out.dump(2) + "\n";
}

std::string cmd_field_csv(const std::string& config_json) {
  const json j = parse_config(config_json);
  FieldConfig cfg;
  if (j.contains("field_file")) {
    cfg = field_config_from_json(read_file(j.at("field_file").get<std::string>()));
  } else {
    cfg = field_config_from_json(j.at("field").dump());
  }
  std::vector<Vec4> events;
  if (j.contains("events")) {
    for (const auto& ev : j.at("events")) {
      events.push_back({ev.at(0).get<double>(), ev.at(1).get<double>(),
                        ev.at(2).get<double>(), ev.at(3).get<double>()});
    }
  } else {
    const json g = j.value("grid", json::object());
    const int n1 = g.value("n1", 32), n2 = g.value("n2", 32);
    if (n1 < 2 || n2 < 2) throw std::invalid_argument("field: grid resolution must be >= 2");
    const double t = g.value("t", 0.0);
    const double a1 = g.value("x1_min", 0.0), b1 = g.value("x1_max", 1.0);
    const double a2 = g.value("x2_min", 0.0), b2 = g.value("x2_max", 1.0);
    for (int i = 0; i < n1; ++i)
      for (int l = 0; l < n2; ++l)
        events.push_back(
            {t, a1 + (b1 - a1) * i / (n1 - 1), a2 + (b2 - a2) * l / (n2 - 1), 0.0});
  }
  std::string out =
      "t,x1,x2,x3,phi0_re,phi0_im,phi1_re,phi1_im,phi2_re,phi2_im,phi3_re,phi3_im,div_abs\n";
  for (const Vec4& ev : events) {
    const FieldSample s = evaluate(cfg, ev);
    for (int c = 0; c < 4; ++c) {
      if (c) out += ",";
      out += fmt17(ev[c]);
    }
    for (int c = 0; c < 4; ++c) {
      out += ",";
      out += fmt17(s.phi[c].real());
      out += ",";
      out += fmt17(s.phi[c].imag());
    }
    out += ",";
    out += fmt17(std::abs(divergence(cfg, ev)));
    out += "\n";
  }
  return out;
}

std::string cmd_eigenmap_csv(const std::string& config_json) {
  const json j = parse_config(config_json);
  const ExampleParams p = params_from(j);
  GridSpec grid;
  const double period = 2 * 3.14159265358979323846 / std::abs(p.k1);
  const json g = j.value("grid", json::object());
  grid.n1 = g.value("n1", 200);
  grid.n2 = g.value("n2", 200);
  grid.x1_min = g.value("x1_min", 0.0);
  grid.x2_min = g.value("x2_min", 0.0);
  // default domain: one full period, half-open
  grid.x1_max = g.value("x1_max", period * (grid.n1 - 1) / grid.n1);
  grid.x2_max = g.value("x2_max", period * (grid.n2 - 1) / grid.n2);
  return eigenvalue_map_csv(p, grid);
}

std::string cmd_flowlines_csv(const std::string& config_json) {
  const json j = parse_config(config_json);
  const ExampleParams p = params_from(j);
  const double dtau = j.value("dtau", 0.01);
  const int steps = j.value("steps", 1000);
  std::vector<FlowLine> lines;
  if (!j.contains("seeds")) throw std::invalid_argument("flowlines: missing seeds");
  for (const auto& s : j.at("seeds")) {
    const Vec4 seed{s.at(0).get<double>(), s.at(1).get<double>(), s.at(2).get<double>(), 0.0};
    lines.push_back(integrate_flowline(p, seed, dtau, steps));
  }
  return flowlines_csv(lines);
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("procaflow");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"causal energy-momentum flow analysis for the massive vector field"};
  app.require_subcommand(1);

  std::string config_path, out_path, level = "fast", inject;

  auto* modes = app.add_subcommand("modes", "spin classification of a plane wave");
  modes->add_option("--config", config_path, "JSON config: {\"k\":[3],\"mass\":m} or {\"k4\":[4]}")
      ->required();
  modes->add_option("--out", out_path, "output path (default stdout)");

  auto* field = app.add_subcommand("field", "evaluate a field configuration to CSV");
  field->add_option("--config", config_path, "JSON config with field + events/grid")->required();
  field->add_option("--out", out_path, "output path (default stdout)");

  auto* eigenmap = app.add_subcommand("eigenmap", "time-like eigenvalue map to CSV");
  eigenmap->add_option("--config", config_path, "JSON config {k1,k2,mass,grid{...}}");
  eigenmap->add_option("--out", out_path, "output path (default stdout)");

  auto* flowlines = app.add_subcommand("flowlines", "integrate rest-energy flow lines to CSV");
  flowlines->add_option("--config", config_path, "JSON config {k1,k2,mass,seeds,dtau,steps}")
      ->required();
  flowlines->add_option("--out", out_path, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the invariant audit suite");
  verify->add_option("--level", level, "fast|full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--out", out_path, "output path (default stdout)");
  verify->add_option("--inject", inject, "fault injection hook (testing)")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string out;
    if (modes->parsed()) {
      out = cmd_modes_report(read_file(config_path));
    } else if (field->parsed()) {
      out = cmd_field_csv(read_file(config_path));
    } else if (eigenmap->parsed()) {
      out = config_path.empty() ? cmd_eigenmap_csv("{}")
                                : cmd_eigenmap_csv(read_file(config_path));
    } else if (flowlines->parsed()) {
      out = cmd_flowlines_csv(read_file(config_path));
    } else if (verify->parsed()) {
      if (inject == "dual-sign") detail::dual_sign_fault = true;
      const AuditReport report = run_audit(level == "full");
      detail::dual_sign_fault = false;
      out = to_json(report);
      write_output(out_path, out);
      return report.all_pass() ? 0 : 1;
    }
    write_output(out_path, out);
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace procaflow

#include "procaflow/example_flows.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace procaflow {

namespace {

void append_num(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

double ExampleParams::k0() const { return mass_shell({k1, 0, 0}, m); }

FieldConfig ExampleParams::config() const { return standing_wave_spin_up(k1, k2, m); }

ExampleParams make_example_params(double k1, double k2, double m) {
  if (std::abs(std::abs(k1) - std::abs(k2)) > 1e-12 * (std::abs(k1) + std::abs(k2))) {
    throw std::invalid_argument("example params: requires |k1| == |k2|");
  }
  if (!(m > 0)) throw std::invalid_argument("example params: m must be positive");
  return {k1, k2, m};
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::real_lambda: return "real";
    case Branch::imaginary_lambda: return "imaginary";
    case Branch::crossover: return "crossover";
  }
  return "?";
}

BranchPoint branch_quantities(const ExampleParams& p, double x1, double x2) {
  BranchPoint bp;
  bp.x1 = x1;
  bp.x2 = x2;
  const double m2 = p.m * p.m;
  bp.A = m2 * std::cos(p.k1 * x1);
  bp.B = -m2 * std::cos(p.k2 * x2);
  bp.alpha = p.m * (p.k1 * std::sin(p.k1 * x1) + p.k2 * std::sin(p.k2 * x2));
  bp.lambda2 = bp.A * bp.A + bp.B * bp.B - bp.alpha * bp.alpha;
  if (bp.lambda2 > kCrossoverBand)
    bp.branch = Branch::real_lambda;
  else if (bp.lambda2 < -kCrossoverBand)
    bp.branch = Branch::imaginary_lambda;
  else
    bp.branch = Branch::crossover;
  return bp;
}

Vec4 analytic_velocity(const ExampleParams& p, double x1, double x2) {
  const BranchPoint bp = branch_quantities(p, x1, x2);
  if (bp.branch == Branch::crossover) {
    throw std::domain_error("analytic_velocity: inside the crossover band");
  }
  const double m2 = p.m * p.m;
  const double c1 = std::cos(p.k1 * x1), c2 = std::cos(p.k2 * x2);
  const double q = std::sqrt(c1 * c1 + c2 * c2);
  if (bp.branch == Branch::real_lambda) {
    const double lam = std::sqrt(bp.lambda2);
    return {m2 * q / lam, bp.alpha * c2 / (q * lam), -bp.alpha * c1 / (q * lam), 0};
  }
  const double al = std::sqrt(-bp.lambda2);
  Vec4 u{bp.alpha / al, m2 * c2 / al, -m2 * c1 / al, 0};
  return u[0] >= 0 ? u : -u;
}

double analytic_eigenvalue(const ExampleParams& p, double x1, double x2) {
  const double m2 = p.m * p.m;
  const double k0 = p.k0();
  const double c1 = std::cos(p.k1 * x1), c2 = std::cos(p.k2 * x2);
  const double s1 = std::sin(p.k1 * x1), s2 = std::sin(p.k2 * x2);
  const double q = c1 * c1 + c2 * c2;
  const double sum = p.k1 * s1 + p.k2 * s2;
  return m2 * k0 * k0 * q + m2 * m2 * q - m2 * sum * sum;
}

std::vector<double> eigenvalue_map(const ExampleParams& p, const GridSpec& grid) {
  if (grid.n1 < 2 || grid.n2 < 2) throw std::invalid_argument("eigenvalue_map: empty grid");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(grid.n1) * grid.n2);
  for (int i = 0; i < grid.n1; ++i) {
    const double x1 = grid.x1_min + (grid.x1_max - grid.x1_min) * i / (grid.n1 - 1);
    for (int j = 0; j < grid.n2; ++j) {
      const double x2 = grid.x2_min + (grid.x2_max - grid.x2_min) * j / (grid.n2 - 1);
      out.push_back(analytic_eigenvalue(p, x1, x2));
    }
  }
  return out;
}

FlowLine integrate_flowline(const ExampleParams& p, const Vec4& seed, double dtau,
                            int steps) {
  if (!(dtau != 0)) throw std::invalid_argument("integrate_flowline: dtau must be nonzero");
  if (steps < 1) throw std::invalid_argument("integrate_flowline: steps must be >= 1");
  const BranchPoint bp0 = branch_quantities(p, seed[1], seed[2]);
  if (bp0.branch == Branch::crossover) {
    throw std::invalid_argument("integrate_flowline: seed on the crossover locus");
  }
  FlowLine line;
  line.seed = seed;
  line.step = dtau;
  line.events.push_back(seed);
  line.velocities.push_back(analytic_velocity(p, seed[1], seed[2]));
  line.branches.push_back(bp0.branch);

  Vec4 x = seed;
  for (int s = 0; s < steps; ++s) {
    Vec4 stage[4];
    Vec4 pos[4] = {x, x, x, x};
    bool aborted = false;
    static constexpr double coef[4] = {0.0, 0.5, 0.5, 1.0};
    for (int j = 0; j < 4; ++j) {
      if (j > 0) pos[j] = x + (coef[j] * dtau) * stage[j - 1];
      const BranchPoint bp = branch_quantities(p, pos[j][1], pos[j][2]);
      if (bp.branch == Branch::crossover) {
        line.crossover_hit = true;
        line.crossover_lambda2 = bp.lambda2;
        aborted = true;
        break;
      }
      stage[j] = analytic_velocity(p, pos[j][1], pos[j][2]);
    }
    if (aborted) break;
    x = x + (dtau / 6.0) * (stage[0] + 2.0 * stage[1] + 2.0 * stage[2] + stage[3]);
    const BranchPoint bp = branch_quantities(p, x[1], x[2]);
    if (bp.branch == Branch::crossover) {
      line.crossover_hit = true;
      line.crossover_lambda2 = bp.lambda2;
      break;
    }
    line.events.push_back(x);
    line.velocities.push_back(analytic_velocity(p, x[1], x[2]));
    line.branches.push_back(bp.branch);
  }
  return line;
}

std::string eigenvalue_map_csv(const ExampleParams& p, const GridSpec& grid) {
  const std::vector<double> values = eigenvalue_map(p, grid);
  std::string out;
  out += "x1";
  for (int j = 0; j < grid.n2; ++j) {
    const double x2 = grid.x2_min + (grid.x2_max - grid.x2_min) * j / (grid.n2 - 1);
    out += ",";
    append_num(out, x2);
  }
  out += "\n";
  for (int i = 0; i < grid.n1; ++i) {
    const double x1 = grid.x1_min + (grid.x1_max - grid.x1_min) * i / (grid.n1 - 1);
    append_num(out, x1);
    for (int j = 0; j < grid.n2; ++j) {
      out += ",";
      append_num(out, values[static_cast<std::size_t>(i) * grid.n2 + j]);
    }
    out += "\n";
  }
  return out;
}

std::string flowlines_csv(const std::vector<FlowLine>& lines) {
  std::string out = "line,tau,t,x1,x2,u0,u1,u2,branch\n";
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const FlowLine& fl = lines[li];
    for (std::size_t s = 0; s < fl.events.size(); ++s) {
      append_num(out, static_cast<double>(li));
      out += ",";
      append_num(out, fl.step * static_cast<double>(s));
      for (int c = 0; c < 3; ++c) {
        out += ",";
        append_num(out, fl.events[s][c]);
      }
      for (int c = 0; c < 3; ++c) {
        out += ",";
        append_num(out, fl.velocities[s][c]);
      }
      out += ",";
      out += to_string(fl.branches[s]);
      out += "\n";
    }
  }
  return out;
}

}  // namespace procaflow

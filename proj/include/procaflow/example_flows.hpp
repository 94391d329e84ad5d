#pragma once

#include <string>
#include <vector>

#include "procaflow/field_modes.hpp"
#include "procaflow/minkowski.hpp"

// Rest-energy flow analysis of the plane standing wave: closed-form velocity
// field and eigenvalue landscape, flow-line integration, and CSV export.
//
// With c_i = cos(k_i x_i), s_i = sin(k_i x_i) and
//   A = m^2 c1, B = -m^2 c2, alpha = m (k1 s1 + k2 s2),
// the branch parameter is lambda^2 = A^2 + B^2 - alpha^2; the time-like
// eigenvector switches between two closed forms as lambda^2 changes sign.

namespace procaflow {

struct ExampleParams {
  double k1 = 0.2;
  double k2 = 0.2;
  double m = 1.0;

  double k0() const;  // mass shell of the constituent waves, sqrt(k1^2 + m^2)
  FieldConfig config() const;
};

ExampleParams make_example_params(double k1, double k2, double m);

enum class Branch { real_lambda, imaginary_lambda, crossover };

std::string to_string(Branch b);

struct BranchPoint {
  double x1 = 0, x2 = 0;
  double A = 0, B = 0, alpha = 0;
  double lambda2 = 0;
  Branch branch = Branch::crossover;
};

inline constexpr double kCrossoverBand = 1e-10;

BranchPoint branch_quantities(const ExampleParams& p, double x1, double x2);

// Unit future-pointing four-velocity of the rest-energy flow.  Throws
// std::domain_error inside the crossover band |lambda^2| <= 1e-10.
Vec4 analytic_velocity(const ExampleParams& p, double x1, double x2);

// Closed-form time-like eigenvalue
//   m^2 k0^2 (c1^2+c2^2) + m^4 (c1^2+c2^2) - m^2 (k1 s1 + k2 s2)^2.
double analytic_eigenvalue(const ExampleParams& p, double x1, double x2);

struct GridSpec {
  double x1_min = 0, x1_max = 0;
  double x2_min = 0, x2_max = 0;
  int n1 = 0, n2 = 0;  // >= 2 each
};

// Row-major n1 x n2 grid of analytic_eigenvalue values (x1 varies over rows).
std::vector<double> eigenvalue_map(const ExampleParams& p, const GridSpec& grid);

struct FlowLine {
  Vec4 seed{};
  double step = 0;  // proper-time spacing
  std::vector<Vec4> events;
  std::vector<Vec4> velocities;
  std::vector<Branch> branches;
  bool crossover_hit = false;
  double crossover_lambda2 = 0;  // lambda^2 at the aborted sample
};

// Fixed-step classical RK4 on dx/dtau = u(x1, x2).  Stops early (partial
// result, crossover_hit set) if any stage lands inside the crossover band.
FlowLine integrate_flowline(const ExampleParams& p, const Vec4& seed, double dtau,
                            int steps);

// CSV emission (LF line endings, 17 significant digits).
std::string eigenvalue_map_csv(const ExampleParams& p, const GridSpec& grid);
std::string flowlines_csv(const std::vector<FlowLine>& lines);

}  // namespace procaflow

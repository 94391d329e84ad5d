#pragma once

#include <array>
#include <optional>
#include <vector>

#include "procaflow/eigen4.hpp"
#include "procaflow/minkowski.hpp"

// Null-tetrad construction through the extremal duality rotation, closed-form
// eigen-decomposition of the stress tensor for the two field/potential
// alignments, the common time-like two-plane of two frames, and the general
// numeric eigen-solver for arbitrary symmetric tensors.

namespace procaflow {

enum class Causal { timelike, spacelike, null, degenerate };

std::string to_string(Causal c);

struct FrameTetrad {
  Vec4 T{}, Z{}, X{}, Y{};  // T.T=+1 (future), Z/X/Y unit spacelike
                            // (T,Z) span the time-like two-plane, (X,Y) the
                            // space-like one
};

struct NullBasis {
  CVec4 l{}, n{}, m{}, mbar{};  // l.n = 1, m.mbar = -1, all others 0
};

NullBasis null_basis(const FrameTetrad& f);

struct EigenPair {
  double eigenvalue = 0;
  Vec4 vector{};
  Causal causal = Causal::degenerate;
};

enum class CaseTag { i, ii };

struct DecompositionCase {
  CaseTag case_tag = CaseTag::i;
  double alpha = 0, beta = 0, gamma = 0, delta = 0;  // phi on the tetrad
  double k = 0;                                      // maxwellian eigenvalue magnitude
  bool fallback_seed = false;  // tetrad direction(s) fixed from coordinate seeds
  bool degenerate = false;
};

struct CommonPlane {
  Vec4 t_hat{}, z_hat{};
  double theta1 = 0, theta2 = 0;  // rapidities of the two time vectors in Omega
  bool identical_planes = false;
};

// Extremal duality angle: rotating G by theta kills the mixed invariant
// (*G.G -> 0) and makes the field electric-dominant (G.G <= 0).  Range
// (-pi/2, pi/2].  Throws std::invalid_argument on a vanishing field.
double extremal_angle(const AntisymR& g);

// Orthonormal tetrad adapted to the field: (T,Z) spans the time-like
// two-plane of the extremal-rotated G, (X,Y) the space-like one, with the
// orientation chosen so phi decomposes as alpha T + gamma X (case i) or
// beta Z + delta Y (case ii).  Throws std::invalid_argument when the field
// invariant k vanishes (null field).
std::pair<FrameTetrad, DecompositionCase> tetrad_from_field(const AntisymR& g,
                                                            const Vec4& phi);

struct NullEigenvectors {
  // real eigenvalue pair (+lam1, -lam1): null vectors spanning the time-like
  // two-plane, scaled to unit time component
  std::array<Vec4, 2> timelike_plane{};
  std::array<double, 2> real_eigenvalues{};
  // pure-imaginary pair +-i lam2: real/imaginary parts of the eigenvector
  // span the space-like two-plane (orthonormalized)
  std::array<Vec4, 2> spacelike_plane{};
  double imag_eigenvalue = 0;  // lam2 >= 0
  bool degenerate_timelike = false;   // lam1 ~ 0: plane recovered from the dual
  bool degenerate_spacelike = false;  // lam2 ~ 0
};

// Eigen-structure of a real antisymmetric tensor (mixed form).
// Throws std::invalid_argument when k ~ 0 (null field).
NullEigenvectors null_eigenvectors(const AntisymR& g);

// Closed-form eigen-decomposition of
//   k[(T T - Z Z) + (X X + Y Y)] + m^2 phi phi - (m^2/2)(phi.phi) g
// for phi = alpha T + gamma X (case i) or beta Z + delta Y (case ii).
// Eigenvectors are returned in tetrad coordinates (components on T, Z, X, Y).
std::array<EigenPair, 4> eigensystem_case(const DecompositionCase& decomp, double m,
                                          double phi_norm2);

// Common time-like two-plane Omega of two frames; theta_i are the rapidities
// of the (plane_i ∩ Omega) time directions with respect to (t_hat, z_hat).
// Throws std::runtime_error if no common time-like plane exists.
CommonPlane common_plane(const FrameTetrad& t1, const FrameTetrad& t2);

struct ComplexMasslessEigen {
  EigenPair timelike{};   // in coordinates of the Omega frame: a t_hat + b z_hat
  EigenPair spacelike{};
  double tanh_theta = 0;  // three-velocity of the time-like eigenvector in Omega
};

// Eigenvalues of 2 k1 [T(1)T(1) - Z(1)Z(1)] + 2 k2 [T(2)T(2) - Z(2)Z(2)]
// restricted to Omega:
//   Lambda = (k1+k2) +- sqrt((k1 ch2t1 + k2 ch2t2)^2 - (k1 sh2t1 + k2 sh2t2)^2)
ComplexMasslessEigen eigensystem_complex_massless(double k1, double k2,
                                                  const CommonPlane& plane);

struct EigenSystem {
  std::array<EigenPair, 4> pairs{};  // real eigenpairs first
  int n_real = 0;
  bool has_complex_pair = false;
  std::optional<int> timelike_index;  // unique future-pointing unit time-like
                                      // eigenvector, when one exists
};

// General eigen-decomposition of the mixed tensor T^mu_nu.  Real eigenpairs
// carry causal labels (norm within +-1e-10 of zero -> null/degenerate); the
// time-like eigenvector, when unique, is normalized to E.E = +1, E^0 > 0.
EigenSystem eigensystem_numeric(const Sym4& t);

}  // namespace procaflow

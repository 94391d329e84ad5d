#pragma once

#include <string>
#include <vector>

#include "procaflow/minkowski.hpp"

// Rotation/boost generators, the Pauli-Lubanski operator realized on a single
// plane wave, hermitian spin operators, and the spin-mode classification of
// on-shell polarizations.
//
// Sign conventions: the W matrices act on contravariant polarization columns
// and are fixed so that (a) iM_k obey the angular-momentum algebra, (b) for k
// along x3 the circular polarizations (0,1,+-i,0) carry W^3 = +-k0, and (c)
// the hermitian spin operators satisfy [S_p, S_q] = i eps_{pqr} S_r.

namespace procaflow {

struct GeneratorSet {
  std::array<Mat4, 3> M;  // spatial rotations: M1=M_32, M2=M_13, M3=M_21
  std::array<Mat4, 3> N;  // boosts: N1=M_01, N2=M_02, N3=M_03
};

const GeneratorSet& generators();

struct PauliLubanski {
  Vec4 k;                   // contravariant, on-shell
  double mass = 0;
  std::array<CMat4, 4> W;   // W^0 .. W^3
};

// Builds W^mu for the plane wave e^{-i k.x}; the momentum operator acts as
// the covariant components of k.  Throws std::invalid_argument unless k is
// time-like with k^0 > 0.
PauliLubanski pauli_lubanski(const Vec4& k);

enum class SpinKind { longitudinal, circular_plus, circular_minus, transverse, zero };

std::string to_string(SpinKind k);

struct SpinMode {
  cplx eigenvalue{};
  CVec4 polarization{};       // components as derived (unnormalized)
  CVec4 unit_polarization{};  // hermitian-norm 1
  SpinKind kind{};
  bool degenerate_parametrization = false;
};

// Eigenmodes of W^3 for an on-shell k: the longitudinal lambda = 0 mode and
// the pair lambda = +-sqrt(k0^2 - k1^2 - k2^2).  All returned polarizations
// satisfy k.eps = 0.
std::vector<SpinMode> eigenmodes_w3(const Vec4& k);

// Eigenmodes of W^0: lambda = 0 and, when |k_spatial| > 0, the helicity pair
// lambda = +-|k_spatial|.
std::vector<SpinMode> eigenmodes_w0(const Vec4& k);

// Hermitian spin operators S = (1/m)[W - W^0 P/(m + P^0)] with P the
// covariant momentum components; satisfy the su(2) commutation rule.
std::array<CMat4, 3> spin_operator(const Vec4& k);

}  // namespace procaflow

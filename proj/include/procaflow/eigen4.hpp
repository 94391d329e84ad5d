#pragma once

#include "procaflow/minkowski.hpp"

// Dense eigensolver for general (non-symmetric) real 4x4 matrices:
// balancing, Householder reduction to Hessenberg form, Francis double-shift
// QR iteration to real Schur form, eigenvectors by quasi-triangular back
// substitution.  Self-contained; no external linear-algebra dependency.

namespace procaflow {

struct Eigen4Result {
  // Eigenvalues sorted by descending real part (ties: descending imag).
  std::array<cplx, 4> values{};
  std::array<bool, 4> is_real{};
  // Right eigenvector of values[i], split into real and imaginary parts;
  // vec_im[i] is zero for real eigenvalues.  Euclidean-normalized.
  std::array<Vec4, 4> vec_re{};
  std::array<Vec4, 4> vec_im{};
  int qr_iterations = 0;
  bool converged = true;
};

Eigen4Result eigen_solve4(const Mat4& a);

}  // namespace procaflow

#pragma once

#include "rickart/matrix/eig.hpp"

namespace rickart::matrix {

/// Membership in K = { sum x_i* x_i }.
///
/// A hermitian matrix with nonnegative spectrum is y*y for y = sqrt(x), and
/// every x_i* x_i has nonnegative spectrum, so the spectral test decides K.
inline bool in_cone(const MatrixElement& x, const Tolerance& tol = {}) {
  if (!is_hermitian(x, tol)) return false;
  return min_eigenvalue(x, tol) >= -tol.eps_psd;
}

}  // namespace rickart::matrix

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>

#include "rickart/matrix/cone.hpp"

namespace rickart::matrix {

/// Positive square root via the spectral decomposition. The result is a real
/// function of x, hence a polynomial in x, hence in the bicommutant {x}''.
/// Eigenvalues at rounding level (|l| <= 64 eps ||x||) are taken as 0, so that
/// a numerically repeated zero eigenvalue keeps a single square root.
inline MatrixElement sqrt_psd(const MatrixElement& x, const Tolerance& tol = {}) {
  if (!in_cone(x, tol)) throw Error(ErrorKind::NotPositive, "sqrt_psd requires x in K");
  const auto eig = eig_hermitian(x, tol);
  const double scale = eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0;
  const double noise = 64 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale);
  return hermitize(spectral_apply(eig, [noise](double l) { return l <= noise ? 0.0 : std::sqrt(l); }));
}

/// Coupled Newton (Denman-Beavers) iteration
///   z <- (z + w^-1)/2,  w <- (w + z^-1)/2,   z0 = x + eps_psd*1, w0 = 1,
/// converging to sqrt(x + eps_psd*1). Independent of any eigensolver.
inline MatrixElement sqrt_psd_iterative(const MatrixElement& x, const Tolerance& tol = {},
                                        int max_iterations = 100) {
  if (!is_hermitian(x, tol)) throw Error(ErrorKind::NotHermitian, "sqrt_psd_iterative requires x* = x");
  const Eigen::Index n = static_cast<Eigen::Index>(x.dim());
  Dense z = x.dense() + tol.eps_psd * Dense::Identity(n, n);
  Dense w = Dense::Identity(n, n);
  for (int k = 0; k < max_iterations; ++k) {
    const Dense z_inv = z.partialPivLu().inverse();
    const Dense w_inv = w.partialPivLu().inverse();
    Dense z_next = 0.5 * (z + w_inv);
    w = 0.5 * (w + z_inv);
    const double step = (z_next - z).cwiseAbs().maxCoeff();
    z = std::move(z_next);
    if (step <= 1e-15 * std::max(1.0, z.cwiseAbs().maxCoeff())) break;
  }
  return hermitize(MatrixElement(std::move(z)));
}

}  // namespace rickart::matrix

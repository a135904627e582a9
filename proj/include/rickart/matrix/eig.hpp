#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "rickart/matrix/element.hpp"

namespace rickart::matrix {

/// Eigenvalues in ascending order with orthonormal eigenvector columns.
struct HermitianEigen {
  Eigen::VectorXd values;
  Dense vectors;

  MatrixElement reconstruct() const {
    return MatrixElement(vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint());
  }
};

/// A group of numerically coincident eigenvalues and the projector onto
/// their joint eigenspace. Individual eigenvectors inside a cluster are not
/// well defined; the projector is.
struct EigenCluster {
  double value = 0;  // mean of the member eigenvalues
  std::size_t multiplicity = 0;
  MatrixElement projector;
};

/// Spectral decomposition of a hermitian matrix.
///
/// Eigenvectors belonging to eigenvalues closer than `tol.eps_psd` are
/// re-orthonormalized as a block.
inline HermitianEigen eig_hermitian(const MatrixElement& x, const Tolerance& tol = {}) {
  if (!is_hermitian(x, tol)) throw Error(ErrorKind::NotHermitian, "eig_hermitian requires x* = x");
  Eigen::SelfAdjointEigenSolver<Dense> solver(hermitize(x).dense());
  HermitianEigen out{solver.eigenvalues(), solver.eigenvectors()};

  const Eigen::Index n = out.values.size();
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && out.values(stop) - out.values(stop - 1) < tol.eps_psd) ++stop;
    if (stop - start > 1) {
      Dense block = out.vectors.middleCols(start, stop - start);
      Eigen::HouseholderQR<Dense> qr(block);
      Dense q = qr.householderQ() * Dense::Identity(n, stop - start);
      out.vectors.middleCols(start, stop - start) = q;
    }
    start = stop;
  }
  return out;
}

/// Groups eigenvalues whose consecutive gaps are below `gap` and returns
/// one projector per group, in ascending order of value.
inline std::vector<EigenCluster> eigen_clusters(const HermitianEigen& eig, double gap) {
  std::vector<EigenCluster> out;
  const Eigen::Index n = eig.values.size();
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && eig.values(stop) - eig.values(stop - 1) < gap) ++stop;
    const Dense v = eig.vectors.middleCols(start, stop - start);
    EigenCluster c;
    c.value = eig.values.segment(start, stop - start).mean();
    c.multiplicity = static_cast<std::size_t>(stop - start);
    c.projector = MatrixElement(v * v.adjoint());
    out.push_back(std::move(c));
    start = stop;
  }
  return out;
}

/// Applies a real function to the spectrum: sum_k f(lambda_k) v_k v_k*.
template <class Fn>
MatrixElement spectral_apply(const HermitianEigen& eig, Fn&& fn) {
  Eigen::VectorXcd mapped(eig.values.size());
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) mapped(k) = fn(eig.values(k));
  return MatrixElement(eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint());
}

inline double min_eigenvalue(const MatrixElement& x, const Tolerance& tol = {}) {
  return eig_hermitian(x, tol).values.minCoeff();
}

/// max |lambda| over the spectrum of a hermitian matrix.
inline double spectral_radius(const MatrixElement& x, const Tolerance& tol = {}) {
  return eig_hermitian(x, tol).values.cwiseAbs().maxCoeff();
}

/// Largest singular value (operator 2-norm).
inline double operator_norm(const MatrixElement& x) {
  Eigen::JacobiSVD<Dense> svd(x.dense());
  return svd.singularValues()(0);
}

}  // namespace rickart::matrix

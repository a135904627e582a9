#pragma once

#include <algorithm>
#include <vector>

#include <Eigen/SVD>

#include "rickart/matrix/element.hpp"

namespace rickart::matrix {

namespace detail {

/// Singular values at or below this are treated as zero.
inline double rank_threshold(double sigma_max, const Tolerance& tol) {
  return tol.eps_eq * std::max(1.0, sigma_max);
}

}  // namespace detail

/// RP(x): the orthogonal projection onto the column space of x*, i.e. the
/// least projection e with x e = x. The right annihilator of x is
/// r(x) = { y : x y = 0 } = (1 - RP(x)) M_n.
inline ProjectionMatrix right_projection(const MatrixElement& x, const Tolerance& tol = {}) {
  Eigen::JacobiSVD<Dense> svd(x.dense(), Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = detail::rank_threshold(s.size() ? s(0) : 0.0, tol);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  const Dense v = svd.matrixV().leftCols(rank);
  return ProjectionMatrix::trusted(hermitize(MatrixElement(v * v.adjoint())));
}

/// Orthonormal basis of ker(x) as columns, computed independently of RP via
/// the complementary right singular vectors.
inline Dense kernel_basis(const MatrixElement& x, const Tolerance& tol = {}) {
  Eigen::JacobiSVD<Dense> svd(x.dense(), Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = detail::rank_threshold(s.size() ? s(0) : 0.0, tol);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixV().rightCols(svd.matrixV().cols() - rank);
}

inline bool is_projection(const MatrixElement& e, const Tolerance& tol = {}) {
  return is_hermitian(e, tol) && approx_equal(e * e, e, tol);
}

/// Orthogonal projection onto the span of the given columns.
inline ProjectionMatrix projection_onto(const Dense& columns) {
  if (columns.cols() == 0)
    return ProjectionMatrix::trusted(MatrixElement::zero(static_cast<std::size_t>(columns.rows())));
  Eigen::ColPivHouseholderQR<Dense> qr(columns);
  const Dense basis = qr.householderQ() * Dense::Identity(columns.rows(), qr.rank());
  return ProjectionMatrix::trusted(hermitize(MatrixElement(basis * basis.adjoint())));
}

}  // namespace rickart::matrix

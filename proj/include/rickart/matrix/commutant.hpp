#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include <Eigen/SVD>

#include "rickart/matrix/element.hpp"

namespace rickart::matrix {

/// An orthonormal (Frobenius inner product) basis of a linear subspace of M_n.
class CommutantBasis {
 public:
  CommutantBasis(std::size_t n, Dense vec_basis) : n_(n), vec_(std::move(vec_basis)) {}

  std::size_t dim() const { return static_cast<std::size_t>(vec_.cols()); }
  std::size_t matrix_dim() const { return n_; }

  MatrixElement member(std::size_t k) const {
    const auto n = static_cast<Eigen::Index>(n_);
    Dense m = vec_.col(static_cast<Eigen::Index>(k)).reshaped(n, n);
    return MatrixElement(std::move(m));
  }

  std::vector<MatrixElement> members() const {
    std::vector<MatrixElement> out;
    out.reserve(dim());
    for (std::size_t k = 0; k < dim(); ++k) out.push_back(member(k));
    return out;
  }

  /// Frobenius distance from y to the subspace (least-squares residual).
  double residual(const MatrixElement& y) const {
    const Vector v = y.dense().reshaped();
    const Vector proj = vec_ * (vec_.adjoint() * v);
    return (v - proj).norm();
  }

  bool contains(const MatrixElement& y, const Tolerance& tol = {}) const { return residual(y) <= tol.eps_eq; }

  /// Columns are vec(member_k), orthonormal.
  const Dense& vectorized() const { return vec_; }

 private:
  std::size_t n_;
  Dense vec_;
};

/// The commutant {S}' = { y : y s = s y for all s in S }, computed as the null
/// space of the stacked linear map y -> (y s - s y)_s. Singular values below
/// eps_psd * max(1, sigma_max) count as zero.
inline CommutantBasis commutant(std::span<const MatrixElement> generators, const Tolerance& tol = {}) {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "commutant requires at least one generator");
  const std::size_t n = generators.front().dim();
  const auto nn = static_cast<Eigen::Index>(n * n);
  const auto ni = static_cast<Eigen::Index>(n);
  const Dense id = Dense::Identity(ni, ni);

  Dense stacked(nn * static_cast<Eigen::Index>(generators.size()), nn);
  Eigen::Index row = 0;
  for (const auto& s : generators) {
    if (s.dim() != n) throw Error(ErrorKind::DimensionMismatch, "commutant generators differ in dimension");
    // vec(y s) = (s^T (x) I) vec(y),  vec(s y) = (I (x) s) vec(y)   (column-major vec)
    Dense block = Dense::Zero(nn, nn);
    const Dense& sm = s.dense();
    for (Eigen::Index a = 0; a < ni; ++a)
      for (Eigen::Index b = 0; b < ni; ++b) {
        block.block(a * ni, b * ni, ni, ni) += sm(b, a) * id;
        block.block(a * ni, b * ni, ni, ni) -= (a == b ? sm : Dense::Zero(ni, ni));
      }
    stacked.middleRows(row, nn) = block;
    row += nn;
  }

  Eigen::JacobiSVD<Dense, Eigen::ColPivHouseholderQRPreconditioner> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = tol.eps_psd * std::max(1.0, sv.size() ? sv(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  return CommutantBasis(n, svd.matrixV().rightCols(nn - rank));
}

inline CommutantBasis commutant(std::initializer_list<MatrixElement> generators, const Tolerance& tol = {}) {
  const std::vector<MatrixElement> g(generators);
  return commutant(std::span<const MatrixElement>(g), tol);
}

/// {S}'' : the commutant of a basis of {S}'.
inline CommutantBasis bicommutant(std::span<const MatrixElement> generators, const Tolerance& tol = {}) {
  const auto first = commutant(generators, tol).members();
  return commutant(std::span<const MatrixElement>(first), tol);
}

inline CommutantBasis bicommutant(const MatrixElement& x, const Tolerance& tol = {}) {
  return bicommutant(std::span<const MatrixElement>(&x, 1), tol);
}

inline bool commutes(const MatrixElement& x, const MatrixElement& y, const Tolerance& tol = {}) {
  return approx_equal(x * y, y * x, tol);
}

}  // namespace rickart::matrix

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>

#include <Eigen/Dense>

#include "rickart/core/errors.hpp"
#include "rickart/core/tolerance.hpp"

namespace rickart::matrix {

using Complex = std::complex<double>;
using Dense = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr std::size_t kMaxDim = 16;

/// An n x n complex matrix viewed as an element of the *-algebra M_n(C).
/// Star is the conjugate transpose.
class MatrixElement {
 public:
  MatrixElement() : m_(Dense::Zero(1, 1)) {}

  explicit MatrixElement(Dense m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0)
      throw Error(ErrorKind::DimensionMismatch, "matrix element must be square and nonempty");
  }

  static MatrixElement zero(std::size_t n) { return MatrixElement(Dense::Zero(idx(n), idx(n))); }
  static MatrixElement identity(std::size_t n) { return MatrixElement(Dense::Identity(idx(n), idx(n))); }

  static MatrixElement diagonal(std::initializer_list<Complex> diag) {
    Dense m = Dense::Zero(static_cast<Eigen::Index>(diag.size()), static_cast<Eigen::Index>(diag.size()));
    Eigen::Index i = 0;
    for (auto v : diag) {
      m(i, i) = v;
      ++i;
    }
    return MatrixElement(std::move(m));
  }

  static MatrixElement from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    Dense m(n, n);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
      if (static_cast<Eigen::Index>(row.size()) != n)
        throw Error(ErrorKind::DimensionMismatch, "row length differs from row count");
      Eigen::Index j = 0;
      for (auto v : row) m(i, j++) = v;
      ++i;
    }
    return MatrixElement(std::move(m));
  }

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Dense& dense() const { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(idx(i), idx(j)); }

  MatrixElement star() const { return MatrixElement(m_.adjoint()); }

  friend MatrixElement operator+(const MatrixElement& x, const MatrixElement& y) {
    same_dim(x, y);
    return MatrixElement(x.m_ + y.m_);
  }
  friend MatrixElement operator-(const MatrixElement& x, const MatrixElement& y) {
    same_dim(x, y);
    return MatrixElement(x.m_ - y.m_);
  }
  friend MatrixElement operator-(const MatrixElement& x) { return MatrixElement(-x.m_); }
  friend MatrixElement operator*(const MatrixElement& x, const MatrixElement& y) {
    same_dim(x, y);
    return MatrixElement(x.m_ * y.m_);
  }
  friend MatrixElement operator*(Complex a, const MatrixElement& x) { return MatrixElement(a * x.m_); }
  friend MatrixElement operator*(double a, const MatrixElement& x) { return MatrixElement(a * x.m_); }

  /// Largest entry modulus.
  double max_abs() const { return m_.cwiseAbs().maxCoeff(); }

 private:
  static Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }
  static void same_dim(const MatrixElement& x, const MatrixElement& y) {
    if (x.dim() != y.dim()) throw Error(ErrorKind::DimensionMismatch, "operand dimensions differ");
  }

  Dense m_;
};

inline MatrixElement star(const MatrixElement& x) { return x.star(); }
inline MatrixElement one_like(const MatrixElement& x) { return MatrixElement::identity(x.dim()); }
inline MatrixElement zero_like(const MatrixElement& x) { return MatrixElement::zero(x.dim()); }

/// Entrywise equality within eps_eq.
inline bool approx_equal(const MatrixElement& x, const MatrixElement& y, const Tolerance& tol = {}) {
  if (x.dim() != y.dim()) return false;
  return (x.dense() - y.dense()).cwiseAbs().maxCoeff() <= tol.eps_eq;
}

inline double distance(const MatrixElement& x, const MatrixElement& y) {
  return (x.dense() - y.dense()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const MatrixElement& x, const Tolerance& tol = {}) {
  return (x.dense() - x.dense().adjoint()).cwiseAbs().maxCoeff() <= tol.eps_eq;
}

/// Upper bound for the spectral norm: n * max |x_ij|.
inline double entrywise_bound(const MatrixElement& x) { return static_cast<double>(x.dim()) * x.max_abs(); }

/// Every matrix is order-bounded.
inline bool is_bounded(const MatrixElement&, const Tolerance& = {}) { return true; }

/// Symmetrized copy; used after computations that should be hermitian up to rounding.
inline MatrixElement hermitize(const MatrixElement& x) {
  return MatrixElement(0.5 * (x.dense() + x.dense().adjoint()));
}

/// The matrix unit E_ij of dimension n.
inline MatrixElement matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  Dense m = Dense::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return MatrixElement(std::move(m));
}

/// A self-adjoint idempotent.
class ProjectionMatrix {
 public:
  /// Wraps `e` after checking e* = e and e^2 = e within eps_eq.
  static ProjectionMatrix checked(MatrixElement e, const Tolerance& tol = {}) {
    if (!is_hermitian(e, tol) || !approx_equal(e * e, e, tol))
      throw Error(ErrorKind::InvalidArgument, "matrix is not a projection");
    return ProjectionMatrix(std::move(e));
  }

  /// Wraps without checking; for results of constructions that are projections by design.
  static ProjectionMatrix trusted(MatrixElement e) { return ProjectionMatrix(std::move(e)); }

  const MatrixElement& element() const { return e_; }
  operator const MatrixElement&() const { return e_; }  // NOLINT(google-explicit-constructor)
  std::size_t dim() const { return e_.dim(); }

  ProjectionMatrix complement() const { return ProjectionMatrix(one_like(e_) - e_); }

  /// Rank, i.e. the trace rounded to the nearest integer.
  std::size_t rank() const { return static_cast<std::size_t>(std::lround(e_.dense().trace().real())); }

 private:
  explicit ProjectionMatrix(MatrixElement e) : e_(std::move(e)) {}
  MatrixElement e_;
};

}  // namespace rickart::matrix

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "rickart/matrix/model.hpp"
#include "rickart/stepfn/model.hpp"

namespace rickart::random {

using matrix::Complex;
using matrix::Dense;
using matrix::MatrixElement;

inline Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const double re = normal(rng);
  return {re, normal(rng)};
}

/// Entries i.i.d. standard complex Gaussian.
inline MatrixElement matrix(std::size_t n, std::mt19937_64& rng) {
  const auto k = static_cast<Eigen::Index>(n);
  Dense m(k, k);
  for (Eigen::Index j = 0; j < k; ++j)
    for (Eigen::Index i = 0; i < k; ++i) m(i, j) = gaussian(rng);
  return MatrixElement(std::move(m));
}

inline MatrixElement hermitian(std::size_t n, std::mt19937_64& rng) {
  const MatrixElement g = matrix(n, rng);
  return matrix::hermitize(g);
}

/// Haar-distributed unitary from the QR factorization of a Gaussian matrix.
inline Dense unitary(std::size_t n, std::mt19937_64& rng) {
  const Dense g = matrix(n, rng).dense();
  Eigen::HouseholderQR<Dense> qr(g);
  Dense q = qr.householderQ();
  const Dense r = qr.matrixQR();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

/// U diag(d) U* with d uniform in [lo, hi].
inline MatrixElement psd_with_spectrum(std::size_t n, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(lo, hi);
  const Dense u = unitary(n, rng);
  Eigen::VectorXd d(static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < d.size(); ++k) d(k) = unif(rng);
  return matrix::hermitize(MatrixElement(Dense(u * d.cast<Complex>().asDiagonal() * u.adjoint())));
}

/// c* c for a Gaussian c of random rank 0..n, so singular PSD matrices occur.
inline MatrixElement psd(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> rank_dist(0, n);
  const std::size_t r = rank_dist(rng);
  const Dense c = matrix(n, rng).dense().topRows(static_cast<Eigen::Index>(r));
  return matrix::hermitize(MatrixElement(Dense(c.adjoint() * c)));
}

/// A Gaussian matrix with a random set of columns zeroed: rank deficient with
/// a kernel spanned by standard basis vectors.
inline MatrixElement rank_deficient(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution drop(0.35);
  Dense m = matrix(n, rng).dense();
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (drop(rng)) m.col(j).setZero();
  return MatrixElement(std::move(m));
}

/// A Gaussian matrix of random rank r < n with a generic (non-coordinate) kernel.
inline MatrixElement low_rank(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> rank_dist(0, n > 0 ? n - 1 : 0);
  const auto r = static_cast<Eigen::Index>(rank_dist(rng));
  const auto k = static_cast<Eigen::Index>(n);
  Dense a(k, r), b(r, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < r; ++j) a(i, j) = gaussian(rng);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < k; ++j) b(i, j) = gaussian(rng);
  return MatrixElement(Dense(a * b));
}

}  // namespace rickart::random

namespace rickart::random::fn {

using stepfn::Point;
using stepfn::StepFunction;
using stepfn::TailExpr;

/// Labels drawn from k/16 (k = 0..16), the thirds, and the first few reserved
/// tail points, so supports overlap between samples and with tails.
inline Point point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 22);
  const int k = pick(rng);
  if (k <= 16) return Point::fraction(static_cast<std::uint64_t>(k), 16);
  if (k <= 18) return Point::fraction(static_cast<std::uint64_t>(k - 16), 3);
  return Point::reserved(static_cast<std::uint64_t>(k - 18));
}

enum class Shape { General, Hermitian, Positive };

inline Complex value(Shape shape, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::bernoulli_distribution zero(0.15);
  if (zero(rng)) return 0.0;
  switch (shape) {
    case Shape::General: {
      const double re = normal(rng);
      return {re, normal(rng)};
    }
    case Shape::Hermitian: return normal(rng);
    case Shape::Positive: return std::abs(normal(rng));
  }
  return 0.0;
}

/// Bounded tail a + b / n with coefficients of the requested shape.
inline TailExpr tail(Shape shape, std::mt19937_64& rng) {
  const Complex a = value(shape, rng);
  const Complex b = value(shape, rng);
  return TailExpr::constant(a) + TailExpr::constant(b) * TailExpr::index().recip();
}

/// Up to `max_exceptions` exceptional points, with a bounded tail half the time.
inline StepFunction step_function(Shape shape, std::mt19937_64& rng, std::size_t max_exceptions = 8) {
  std::uniform_int_distribution<std::size_t> count(0, max_exceptions);
  std::bernoulli_distribution with_tail(0.5);
  std::map<Point, Complex> exc;
  const std::size_t m = count(rng);
  for (std::size_t k = 0; k < m; ++k) exc[point(rng)] = value(shape, rng);
  std::optional<TailExpr> t;
  if (with_tail(rng)) t = tail(shape, rng);
  return StepFunction(value(shape, rng), std::move(exc), std::move(t));
}

}  // namespace rickart::random::fn

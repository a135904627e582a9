#pragma once

#include <complex>
#include <concepts>
#include <utility>

#include "rickart/core/tolerance.hpp"

namespace rickart {

/// The operations every model element provides: the *-algebra structure,
/// the unit and zero, and the model's decision procedures for equality and
/// membership in the cone K. Lookup is by ADL in the model's namespace.
template <class E>
concept StarAlgebraElement = requires(const E& x, const E& y, const Tolerance& tol, std::complex<double> a,
                                      double r) {
  { x + y } -> std::convertible_to<E>;
  { x - y } -> std::convertible_to<E>;
  { -x } -> std::convertible_to<E>;
  { x * y } -> std::convertible_to<E>;
  { a * x } -> std::convertible_to<E>;
  { r * x } -> std::convertible_to<E>;
  { star(x) } -> std::convertible_to<E>;
  { one_like(x) } -> std::convertible_to<E>;
  { zero_like(x) } -> std::convertible_to<E>;
  { approx_equal(x, y, tol) } -> std::convertible_to<bool>;
  { is_hermitian(x, tol) } -> std::convertible_to<bool>;
  { in_cone(x, tol) } -> std::convertible_to<bool>;
};

/// An RO*-algebra element: additionally a positive square root (PSR), a right
/// projection generating the right annihilator (Rickart condition), and an
/// order-boundedness test with a crude a-priori bound for bisection.
template <class E>
concept RoStarElement = StarAlgebraElement<E> && requires(const E& x, const Tolerance& tol) {
  { sqrt_psd(x, tol) } -> std::convertible_to<E>;
  { right_projection(x, tol) };
  { is_bounded(x, tol) } -> std::convertible_to<bool>;
  { entrywise_bound(x) } -> std::convertible_to<double>;
};

/// Hermitian parts x = a + i b with a = (x + x*)/2 and b = (x - x*)/(2i).
template <StarAlgebraElement E>
std::pair<E, E> hermitian_parts(const E& x) {
  const E xs = star(x);
  E a = 0.5 * (x + xs);
  E b = std::complex<double>(0.0, -0.5) * (x - xs);
  return {std::move(a), std::move(b)};
}

/// x <= y  iff  y - x lies in K.
template <StarAlgebraElement E>
bool leq(const E& x, const E& y, const Tolerance& tol = {}) {
  return in_cone(y - x, tol);
}

}  // namespace rickart

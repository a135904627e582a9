#pragma once

#include "rickart/core/algebra.hpp"
#include "rickart/core/errors.hpp"

namespace rickart {

/// Intermediate elements of the join-with-zero construction for hermitian x:
///
///   y = sqrt(x^2),  a = (y + x)/2,  b = (y - x)/2,
///   e : r(a - x) = e T,   f : r(x + b) = f T,
///
/// so that x e = y e, x f = -y f, (1 - e)(1 - f) = 0, and y e = x v 0.
/// Note a - x = b and x + b = a, so e = 1 - RP(b) and f = 1 - RP(a).
template <class E>
struct PositivePartConstruction {
  E x, y, a, b, e, f;

  E result() const { return y * e; }
};

template <RoStarElement E>
PositivePartConstruction<E> positive_part_construction(const E& x, const Tolerance& tol = {}) {
  if (!is_hermitian(x, tol)) throw Error(ErrorKind::NotHermitian, "positive_part requires x* = x");
  const E xh = 0.5 * (x + star(x));
  const E sq = xh * xh;
  const E y = sqrt_psd(0.5 * (sq + star(sq)), tol);
  const E a = 0.5 * (y + xh);
  const E b = 0.5 * (y - xh);
  const E one = one_like(xh);
  const E rp_b = right_projection(a - xh, tol);
  const E rp_a = right_projection(xh + b, tol);
  return {xh, y, a, b, one - rp_b, one - rp_a};
}

/// x v 0 through the annihilator construction.
template <RoStarElement E>
E positive_part(const E& x, const Tolerance& tol = {}) {
  const E r = positive_part_construction(x, tol).result();
  return 0.5 * (r + star(r));
}

/// |x| = sqrt(x^2).
template <RoStarElement E>
E abs_value(const E& x, const Tolerance& tol = {}) {
  if (!is_hermitian(x, tol)) throw Error(ErrorKind::NotHermitian, "abs_value requires x* = x");
  const E sq = x * x;
  return sqrt_psd(0.5 * (sq + star(sq)), tol);
}

/// x v z = (x - z) v 0 + z.
template <RoStarElement E>
E join(const E& x, const E& z, const Tolerance& tol = {}) {
  return positive_part(x - z, tol) + z;
}

/// x ^ z = -((-x) v (-z)).
template <RoStarElement E>
E meet(const E& x, const E& z, const Tolerance& tol = {}) {
  return -join(-x, -z, tol);
}

}  // namespace rickart

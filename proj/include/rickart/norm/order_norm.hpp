#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "rickart/core/algebra.hpp"
#include "rickart/core/errors.hpp"
#include "rickart/core/series.hpp"

namespace rickart {

namespace detail {

/// Slack used inside the norm bisection. The order test accepts eigenvalues
/// down to -eps_psd, which would bias the infimum low by eps_psd. Inside the
/// bisection the slack is 1e-13 relative to the bracket, a little above the
/// rounding error of the eigensolver, and never more than eps_eq / 10.
inline Tolerance bisection_tolerance(const Tolerance& tol, double scale) {
  Tolerance t = tol;
  t.eps_psd = std::min(0.1 * tol.eps_eq, 1e-13 * std::max(1.0, scale));
  t.eps_eq = t.eps_psd;
  return t;
}

}  // namespace detail

/// ||x|| = inf{ lambda >= 0 : -lambda 1 <= x <= lambda 1 } for hermitian x,
/// found by bisection with the order relation as the only oracle (60 halvings
/// of [0, entrywise bound]). Non-hermitian x uses ||x||^2 = ||x* x||.
template <RoStarElement E>
double order_norm(const E& x, const Tolerance& tol = {}) {
  if (!is_bounded(x, tol)) throw Error(ErrorKind::NotBounded, "order_norm requires a bounded element");
  if (!is_hermitian(x, tol)) return std::sqrt(order_norm(star(x) * x, tol));

  const E h = 0.5 * (x + star(x));
  const E one = one_like(h);
  double lo = 0.0;
  double hi = entrywise_bound(h);
  if (hi == 0.0) return 0.0;
  const Tolerance t = detail::bisection_tolerance(tol, hi);
  auto bounded_by = [&](double lambda) { return leq(-lambda * one, h, t) && leq(h, lambda * one, t); };

  while (!bounded_by(hi)) {
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (bounded_by(mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

/// An element with a certified bound -lambda 1 <= a, b <= lambda 1 on its
/// hermitian parts.
template <class E>
struct BoundedCertificate {
  E element;
  double lambda = 0;

  bool verify(const Tolerance& tol = {}) const {
    const auto [a, b] = hermitian_parts(element);
    const E bound = lambda * one_like(element);
    return leq(-1.0 * bound, a, tol) && leq(a, bound, tol) && leq(-1.0 * bound, b, tol) && leq(b, bound, tol);
  }
};

/// Certificate with the least lambda, or nullopt when the element is not
/// order-bounded (for step functions: detected by the tail growth heuristic).
template <RoStarElement E>
std::optional<BoundedCertificate<E>> extract_bounded(const E& x, const Tolerance& tol = {}) {
  if (!is_bounded(x, tol)) return std::nullopt;
  const auto [a, b] = hermitian_parts(x);
  return BoundedCertificate<E>{x, std::max(order_norm(a, tol), order_norm(b, tol))};
}

struct CStarCheck {
  double lhs = 0;  // ||x* x||
  double rhs = 0;  // ||x||^2
  bool pass = false;
};

/// The C*-identity ||x* x|| = ||x||^2. For non-hermitian x, ||x|| is taken as
/// ||x*|| = sqrt(||x x*||) so that the two sides come from bisections on
/// different elements (x* x versus x x*).
template <RoStarElement E>
CStarCheck cstar_identity_check(const E& x, const Tolerance& tol = {}) {
  CStarCheck c;
  c.lhs = order_norm(star(x) * x, tol);
  const double n = is_hermitian(x, tol) ? order_norm(x, tol) : order_norm(star(x), tol);
  c.rhs = n * n;
  c.pass = std::abs(c.lhs - c.rhs) <= 100 * tol.eps_eq * std::max(1.0, c.rhs);
  return c;
}

struct TailBound {
  std::size_t k = 0;
  double lhs = 0;  // ||a - s_k||
  double rhs = 0;  // 2 * sum_{n>k} ||x_n||
};

template <class E>
struct SeriesSup {
  E sup;
  std::vector<TailBound> tail_bounds;

  bool bounds_hold(double slack = 0) const {
    return std::all_of(tail_bounds.begin(), tail_bounds.end(),
                       [slack](const TailBound& b) { return b.lhs <= b.rhs + slack; });
  }
};

/// Supremum of the partial sums of a dominated series together with the
/// completeness estimate ||a - s_k|| <= 2 sum_{n>k} ||x_n|| for
/// k = 0 .. prefix + extra_tail_steps.
template <RoStarElement E>
SeriesSup<E> series_sup(const DominatedSeries<E>& s, const Tolerance& tol = {}, std::size_t extra_tail_steps = 4) {
  SeriesSup<E> out{fr_sup(s, tol), {}};
  const std::size_t p = s.prefix_size();
  std::vector<double> norms;
  norms.reserve(p);
  for (const auto& x : s.terms) norms.push_back(order_norm(x, tol));
  const double tail_norm = s.tail ? order_norm(s.tail->term, tol) : 0.0;
  const double r = s.tail ? s.tail->ratio : 0.0;

  auto rest_after = [&](std::size_t k) {
    double sum = 0;
    for (std::size_t n = k + 1; n <= p; ++n) sum += norms[n - 1];
    if (s.tail) {
      const std::size_t j0 = k > p ? k - p : 0;  // tail terms j > j0 remain
      sum += tail_norm * std::pow(r, static_cast<double>(j0 + 1)) / (1.0 - r);
    }
    return sum;
  };

  const std::size_t last = p + (s.tail ? extra_tail_steps : 0);
  E partial = zero_like(out.sup);
  for (std::size_t k = 0; k <= last; ++k) {
    if (k > 0) partial = partial + s.term(k);
    out.tail_bounds.push_back({k, order_norm(out.sup - partial, tol), 2.0 * rest_after(k)});
  }
  return out;
}

}  // namespace rickart

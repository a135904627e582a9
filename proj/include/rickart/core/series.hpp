#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rickart/core/algebra.hpp"
#include "rickart/core/errors.hpp"

namespace rickart {

/// Terms after the finite prefix: x_{k+j} = ratio^j * term and
/// eps_{k+j} = ratio^j * eps for j = 1, 2, ...
template <class E>
struct GeometricTail {
  double ratio = 0;
  E term;
  double eps = 0;
};

/// A sequence 0 <= x_n <= eps_n * 1 given as a finite prefix plus an optional
/// geometric tail descriptor. Indices are 1-based as in the usual notation.
template <class E>
struct DominatedSeries {
  std::vector<E> terms;
  std::vector<double> eps;
  std::optional<GeometricTail<E>> tail;

  std::size_t prefix_size() const { return terms.size(); }

  /// n-th term, n >= 1. Beyond the prefix requires a tail.
  E term(std::size_t n) const {
    if (n >= 1 && n <= terms.size()) return terms[n - 1];
    if (!tail || n == 0) throw Error(ErrorKind::InvalidArgument, "series term index out of range");
    return std::pow(tail->ratio, static_cast<double>(n - terms.size())) * tail->term;
  }

  double eps_at(std::size_t n) const {
    if (n >= 1 && n <= eps.size()) return eps[n - 1];
    if (!tail || n == 0) throw Error(ErrorKind::InvalidArgument, "series eps index out of range");
    return std::pow(tail->ratio, static_cast<double>(n - terms.size())) * tail->eps;
  }

  /// sum_{j>=1} ratio^j = r / (1 - r).
  double tail_factor() const { return tail ? tail->ratio / (1.0 - tail->ratio) : 0.0; }

  /// Shape checks independent of the algebra: matching lengths, eps_n >= 0,
  /// and a summable tail.
  void validate_shape() const {
    if (terms.size() != eps.size())
      throw Error(ErrorKind::InvalidArgument, "series: terms and eps differ in length");
    for (double e : eps)
      if (!(e >= 0) || !std::isfinite(e)) throw Error(ErrorKind::DominationViolated, "series: eps_n must be >= 0");
    if (tail) {
      if (!(tail->ratio >= 0) || !(tail->ratio < 1))
        throw Error(ErrorKind::SeriesDiverges, "series: geometric tail ratio must lie in [0, 1)");
      if (!(tail->eps >= 0) || !std::isfinite(tail->eps))
        throw Error(ErrorKind::DominationViolated, "series: tail eps must be >= 0");
    }
  }
};

/// Verifies 0 <= x_n <= eps_n * 1 for every prefix term and the tail's base term
/// (the tail terms are nonnegative multiples of it, so this covers them all).
template <StarAlgebraElement E>
void check_domination(const DominatedSeries<E>& s, const Tolerance& tol = {}) {
  s.validate_shape();
  auto check_one = [&](const E& x, double e, const std::string& where) {
    if (!in_cone(x, tol)) throw Error(ErrorKind::DominationViolated, where + ": term is not >= 0");
    if (!leq(x, e * one_like(x), tol)) throw Error(ErrorKind::DominationViolated, where + ": term exceeds eps * 1");
  };
  for (std::size_t n = 0; n < s.terms.size(); ++n) check_one(s.terms[n], s.eps[n], "term " + std::to_string(n + 1));
  if (s.tail) check_one(s.tail->term, s.tail->eps, "tail");
}

/// Supremum of the partial sums of a dominated positive series (the
/// Fisher-Riesz axiom). For positive terms the partial sums increase, so the
/// supremum is the sum: prefix sum plus term * r / (1 - r) for the tail.
template <StarAlgebraElement E>
E fr_sup(const DominatedSeries<E>& s, const Tolerance& tol = {}) {
  check_domination(s, tol);
  if (s.terms.empty() && !s.tail) throw Error(ErrorKind::InvalidArgument, "series: empty");
  E sum = s.terms.empty() ? zero_like(s.tail->term) : zero_like(s.terms.front());
  for (const auto& x : s.terms) sum = sum + x;
  if (s.tail) sum = sum + s.tail_factor() * s.tail->term;
  return sum;
}

/// k-th partial sum s_k = x_1 + ... + x_k.
template <StarAlgebraElement E>
E partial_sum(const DominatedSeries<E>& s, std::size_t k) {
  E sum = zero_like(s.terms.empty() ? s.tail->term : s.terms.front());
  for (std::size_t n = 1; n <= k; ++n) sum = sum + s.term(n);
  return sum;
}

}  // namespace rickart

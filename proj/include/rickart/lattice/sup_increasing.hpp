#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "rickart/core/algebra.hpp"
#include "rickart/norm/order_norm.hpp"

namespace rickart {

enum class Schedule { Harmonic, Geometric };

/// Terms after the prefix approach `limit` from below:
///   x_{k+j} = limit - c_j (limit - x_k),  c_j = 1/(j+1) or ratio^j.
template <class E>
struct LimitDescriptor {
  E limit;
  Schedule schedule = Schedule::Harmonic;
  double ratio = 0.5;

  double coefficient(std::size_t j) const {
    return schedule == Schedule::Harmonic ? 1.0 / static_cast<double>(j + 1)
                                          : std::pow(ratio, static_cast<double>(j));
  }
};

/// An increasing sequence: a finite prefix plus an optional limit descriptor.
template <class E>
struct IncreasingSequence {
  std::vector<E> prefix;
  std::optional<LimitDescriptor<E>> limit;

  /// n-th term, n >= 1.
  E term(std::size_t n) const {
    if (n >= 1 && n <= prefix.size()) return prefix[n - 1];
    if (!limit || n == 0) throw Error(ErrorKind::InvalidArgument, "sequence index out of range");
    const E& last = prefix.back();
    return limit->limit - limit->coefficient(n - prefix.size()) * (limit->limit - last);
  }
};

template <class E>
struct SupResult {
  E sup;
  E w;                // sqrt(v^2 + 1) + v
  E w_inv;            // sqrt(v^2 + 1) - v
  E compressed_sup;   // sup of w^-1 x_n w^-1, taken in the bounded part
  bool inverse_ok = false;      // w w^-1 = 1 within 10 eps_eq
  bool w_inv_le_one = false;    // w^-1 <= 1
  bool compressed_ok = false;   // compressed terms increase and stay <= w^-1
  double limit_residual = 0;    // ||compressed_sup - w^-1 x_n w^-1|| at the deepest sampled n
};

/// Least upper bound of 0 <= x_1 <= x_2 <= ... <= v. The sequence is
/// compressed into the bounded part by w^-1 (.) w^-1 with
/// w = sqrt(v^2 + 1) + v, whose inverse is sqrt(v^2 + 1) - v; the bounded
/// supremum there is the norm limit, and w (.) w maps it back.
template <RoStarElement E>
SupResult<E> sup_increasing(const IncreasingSequence<E>& seq, const E& v, const Tolerance& tol = {}) {
  if (seq.prefix.empty()) throw Error(ErrorKind::InvalidArgument, "sup_increasing requires a nonempty prefix");
  if (!is_hermitian(v, tol)) throw Error(ErrorKind::NotHermitian, "sup_increasing requires a hermitian bound");
  if (!in_cone(seq.prefix.front(), tol)) throw Error(ErrorKind::NotDominated, "x_1 is not >= 0");
  for (std::size_t n = 0; n < seq.prefix.size(); ++n) {
    if (n + 1 < seq.prefix.size() && !leq(seq.prefix[n], seq.prefix[n + 1], tol))
      throw Error(ErrorKind::NotIncreasing, "x_" + std::to_string(n + 1) + " is not <= x_" + std::to_string(n + 2));
    if (!leq(seq.prefix[n], v, tol))
      throw Error(ErrorKind::NotDominated, "x_" + std::to_string(n + 1) + " is not <= v");
  }
  if (seq.limit) {
    if (!leq(seq.prefix.back(), seq.limit->limit, tol))
      throw Error(ErrorKind::NotIncreasing, "limit is not >= the last prefix term");
    if (!leq(seq.limit->limit, v, tol)) throw Error(ErrorKind::NotDominated, "limit is not <= v");
  }

  const E one = one_like(v);
  const E root = sqrt_psd(v * v + one, tol);
  SupResult<E> out{zero_like(v), root + v, root - v, zero_like(v)};
  out.inverse_ok = approx_equal(out.w * out.w_inv, one, Tolerance{10 * tol.eps_eq, tol.eps_psd, tol.probe_count});
  out.w_inv_le_one = leq(out.w_inv, one, tol);

  auto compress = [&](const E& x) {
    const E c = out.w_inv * x * out.w_inv;
    return 0.5 * (c + star(c));
  };
  std::vector<E> compressed;
  for (const auto& x : seq.prefix) compressed.push_back(compress(x));
  out.compressed_ok = true;
  for (std::size_t n = 0; n < compressed.size(); ++n) {
    if (n + 1 < compressed.size()) out.compressed_ok = out.compressed_ok && leq(compressed[n], compressed[n + 1], tol);
    out.compressed_ok = out.compressed_ok && leq(compressed[n], out.w_inv, tol);
  }

  if (seq.limit) {
    out.compressed_sup = compress(seq.limit->limit);
    out.compressed_ok = out.compressed_ok && leq(compressed.back(), out.compressed_sup, tol) &&
                        leq(out.compressed_sup, out.w_inv, tol);
    // Norm convergence of the compressed tail to the candidate.
    double prev = order_norm(out.compressed_sup - compressed.back(), tol);
    for (std::size_t j = 10; j <= 1'000'000; j *= 10) {
      const double r = order_norm(out.compressed_sup - compress(seq.term(seq.prefix.size() + j)), tol);
      out.compressed_ok = out.compressed_ok && r <= prev + tol.eps_eq;
      prev = r;
    }
    out.limit_residual = prev;
  } else {
    out.compressed_sup = compressed.back();
  }
  const E s = out.w * out.compressed_sup * out.w;
  out.sup = 0.5 * (s + star(s));
  return out;
}

}  // namespace rickart

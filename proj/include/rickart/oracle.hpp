#pragma once

#include <algorithm>

#include "rickart/matrix/model.hpp"
#include "rickart/stepfn/model.hpp"

/// Reference computations that bypass the order-theoretic constructions:
/// eigendecomposition for matrices, pointwise evaluation for step functions.
namespace rickart::oracle {

/// sum over positive eigenvalues of lambda_k v_k v_k*.
inline matrix::MatrixElement positive_part(const matrix::MatrixElement& x, const Tolerance& tol = {}) {
  const auto eig = matrix::eig_hermitian(x, tol);
  return matrix::hermitize(matrix::spectral_apply(eig, [](double l) { return std::max(l, 0.0); }));
}

/// max(Re f, 0) pointwise.
inline stepfn::StepFunction positive_part(const stepfn::StepFunction& f, const Tolerance& = {}) {
  using stepfn::TailExpr;
  return f.map([](matrix::Complex v) { return matrix::Complex(std::max(v.real(), 0.0), 0.0); },
               [](const TailExpr& t) {
                 const TailExpr re = TailExpr::constant(0.5) * (t + t.conj());
                 return TailExpr::constant(0.5) * (re + (re * re).sqrt_nonneg());
               });
}

/// max |eigenvalue| for hermitian x.
inline double norm(const matrix::MatrixElement& x, const Tolerance& tol = {}) {
  return matrix::is_hermitian(x, tol) ? matrix::spectral_radius(x, tol) : matrix::operator_norm(x);
}

/// max |value| over the probe set.
inline double norm(const stepfn::StepFunction& f, const Tolerance& tol = {}) {
  return stepfn::entrywise_bound(f, tol.probe_count);
}

/// Pointwise supremum of finitely many step functions (real parts).
inline stepfn::StepFunction pointwise_max(const std::vector<stepfn::StepFunction>& fs) {
  using stepfn::TailExpr;
  stepfn::StepFunction acc = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) {
    acc = stepfn::StepFunction::zip(
        acc, fs[k], [](matrix::Complex a, matrix::Complex b) { return matrix::Complex(std::max(a.real(), b.real())); },
        [](const TailExpr& a, const TailExpr& b) {
          const TailExpr d = a - b;
          return TailExpr::constant(0.5) * (a + b + (d * d).sqrt_nonneg());
        });
  }
  return acc;
}

}  // namespace rickart::oracle

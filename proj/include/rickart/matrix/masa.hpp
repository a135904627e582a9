#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "rickart/core/algebra.hpp"
#include "rickart/core/report.hpp"
#include "rickart/core/series.hpp"
#include "rickart/matrix/commutant.hpp"
#include "rickart/matrix/json.hpp"
#include "rickart/matrix/projection.hpp"
#include "rickart/matrix/sqrt.hpp"

namespace rickart::matrix {

/// Audits B = span{P_1, ..., P_m} for mutually orthogonal projections summing
/// to 1: commutativity, maximality ({B}' = B), closure under * and RP,
/// agreement RP_B = RP_T, and the PSR and FR axioms inside B.
inline AxiomReport masa_check(const std::vector<MatrixElement>& projections, std::uint64_t seed = 0,
                              std::size_t samples = 100, const Tolerance& tol = {}) {
  AxiomReport report(seed, samples);
  if (projections.empty()) throw Error(ErrorKind::InvalidArgument, "masa_check requires at least one projection");
  const std::size_t n = projections.front().dim();
  const auto m = projections.size();

  auto family_json = [&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : projections) arr.push_back(to_json(p));
    return arr;
  };

  // Subspace B as an orthonormal basis of vec(P_k).
  Dense vecs(static_cast<Eigen::Index>(n * n), static_cast<Eigen::Index>(m));
  for (std::size_t k = 0; k < m; ++k) vecs.col(static_cast<Eigen::Index>(k)) = projections[k].dense().reshaped();
  Eigen::ColPivHouseholderQR<Dense> qr(vecs);
  const CommutantBasis b_space(n, qr.householderQ() * Dense::Identity(vecs.rows(), qr.rank()));

  MatrixElement total = MatrixElement::zero(n);
  bool projections_ok = true;
  for (std::size_t k = 0; k < m; ++k) {
    total = total + projections[k];
    projections_ok = projections_ok && is_projection(projections[k], tol);
    for (std::size_t l = k + 1; l < m; ++l)
      projections_ok = projections_ok && approx_equal(projections[k] * projections[l], MatrixElement::zero(n), tol);
  }
  projections_ok = projections_ok && approx_equal(total, MatrixElement::identity(n), tol);
  report.check("masa.family", projections_ok, family_json, "mutually orthogonal projections summing to 1");

  bool commutative = true;
  for (std::size_t k = 0; k < m && commutative; ++k)
    for (std::size_t l = k + 1; l < m && commutative; ++l)
      commutative = commutes(projections[k], projections[l], tol);
  report.check("masa.commutative", commutative, family_json);

  const auto comm = commutant(std::span<const MatrixElement>(projections), tol);
  bool maximal = comm.dim() == b_space.dim();
  for (std::size_t k = 0; k < comm.dim() && maximal; ++k) maximal = b_space.contains(comm.member(k), tol);
  report.check(
      "masa.maximal", maximal,
      [&] {
        nlohmann::json w = {{"family", family_json()},
                            {"commutant_dim", comm.dim()},
                            {"subalgebra_dim", b_space.dim()}};
        return w;
      },
      "commutant of B equals B");

  // RP inside B: the sum of the minimal projections not annihilated by x.
  auto rp_inside = [&](const MatrixElement& x) {
    MatrixElement e = MatrixElement::zero(n);
    for (const auto& p : projections)
      if ((x * p).max_abs() > tol.eps_eq) e = e + p;
    return e;
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::bernoulli_distribution keep(0.6);
  for (std::size_t s = 0; s < samples; ++s) {
    MatrixElement x = MatrixElement::zero(n);
    MatrixElement pos = MatrixElement::zero(n);
    for (const auto& p : projections) {
      if (keep(rng)) {
        const double re = normal(rng);
        const double im = normal(rng);
        x = x + Complex(re, im) * p;
      }
      if (keep(rng)) pos = pos + std::abs(normal(rng)) * p;
    }
    const auto x_json = [&] { return to_json(x); };

    report.check("masa.member", b_space.contains(x, tol), x_json);
    report.check("masa.star_closed", b_space.contains(star(x), tol), x_json);

    const MatrixElement rp_t = right_projection(x, tol);
    const MatrixElement rp_b = rp_inside(x);
    report.check("masa.rp_closed", b_space.contains(rp_t, tol), x_json);
    report.check("masa.rp_agreement", approx_equal(rp_b, rp_t, tol), x_json, "RP_B(x) = RP_T(x)");

    const MatrixElement y = sqrt_psd(pos, tol);
    const bool psr = in_cone(y, tol) && approx_equal(y * y, pos, Tolerance{10 * tol.eps_eq, tol.eps_psd}) &&
                     b_space.contains(y, Tolerance{10 * tol.eps_eq, tol.eps_psd});
    report.check("masa.psr", psr, [&] { return to_json(pos); }, "sqrt of x in K_B lies in K_B");

    // A dominated series of B-positive elements: x_j = 2^-j * p_j (p_j in B, 0 <= p_j <= 1).
    DominatedSeries<MatrixElement> series;
    for (int j = 1; j <= 3; ++j) {
      MatrixElement t = MatrixElement::zero(n);
      for (const auto& p : projections) t = t + (0.5 + 0.5 * std::tanh(normal(rng))) * p;
      const double w = std::ldexp(1.0, -j);
      series.terms.push_back(w * t);
      series.eps.push_back(w);
    }
    series.tail = GeometricTail<MatrixElement>{0.5, series.terms.back(), series.eps.back()};
    const MatrixElement sup = fr_sup(series, tol);
    bool fr = b_space.contains(sup, tol) && leq(partial_sum(series, series.prefix_size()), sup, tol) &&
              leq(sup, (1.0 + 1e-12) * MatrixElement::identity(n), tol);
    report.check("masa.fr", fr, [&] { return to_json(sup); }, "sup of dominated partial sums lies in B");
  }
  return report;
}

/// Builds the rank-one projections v_k v_k* from an orthonormal basis of C^n
/// (columns of `basis`) and audits the algebra they span.
inline AxiomReport masa_check(const Dense& basis, std::uint64_t seed = 0, std::size_t samples = 100,
                              const Tolerance& tol = {}) {
  if (basis.rows() != basis.cols() ||
      (basis.adjoint() * basis - Dense::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff() > tol.eps_eq)
    throw Error(ErrorKind::InvalidArgument, "masa_check requires an orthonormal basis of C^n");
  std::vector<MatrixElement> projections;
  for (Eigen::Index k = 0; k < basis.cols(); ++k)
    projections.emplace_back(Dense(basis.col(k) * basis.col(k).adjoint()));
  return masa_check(projections, seed, samples, tol);
}

/// If x*x <= 1 then x x* <= 1; vacuously true otherwise.
inline bool prop2_check(const MatrixElement& x, const Tolerance& tol = {}) {
  const auto one = one_like(x);
  if (!leq(star(x) * x, one, tol)) return true;
  return leq(x * star(x), one, tol);
}

}  // namespace rickart::matrix

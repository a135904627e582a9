#pragma once

#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rickart/matrix/model.hpp"
#include "rickart/random.hpp"
#include "rickart/stepfn/model.hpp"

namespace rickart {

/// Full n x n complex matrix algebra.
struct MatrixModel {
  using Element = matrix::MatrixElement;
  static constexpr bool has_commutant = true;
  static constexpr bool has_symbolic_tail = false;

  std::size_t n = 2;

  std::string name() const { return "matrix"; }
  nlohmann::json descriptor() const {
    return {{"model", name()}, {"n", n}, {"has_commutant", has_commutant}, {"has_symbolic_tail", has_symbolic_tail}};
  }

  Element one() const { return Element::identity(n); }
  Element zero() const { return Element::zero(n); }
  Element random_element(std::mt19937_64& rng) const { return random::matrix(n, rng); }
  Element random_hermitian(std::mt19937_64& rng) const { return random::hermitian(n, rng); }
  Element random_positive(std::mt19937_64& rng) const { return random::psd(n, rng); }
  /// 0 <= p <= 1.
  Element random_unit_positive(std::mt19937_64& rng) const { return random::psd_with_spectrum(n, 0.0, 1.0, rng); }

  /// Alternates coordinate-kernel, generic-kernel, and full-rank cases.
  Element random_annihilator_case(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> pick(0, 2);
    switch (pick(rng)) {
      case 0: return random::rank_deficient(n, rng);
      case 1: return random::low_rank(n, rng);
      default: return random::matrix(n, rng);
    }
  }

  /// Matrix units E_ij plus k e_1^T for each kernel vector k of x. Kernel
  /// vectors come from a full-pivot LU, independent of the SVD behind RP.
  std::vector<Element> annihilator_probes(const Element& x) const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.push_back(matrix::matrix_unit(n, i, j));
    Eigen::FullPivLU<matrix::Dense> lu(x.dense());
    lu.setThreshold(1e-10);
    if (lu.rank() < static_cast<Eigen::Index>(n)) {
      const matrix::Dense k = lu.kernel();
      for (Eigen::Index c = 0; c < k.cols(); ++c) {
        matrix::Dense y = matrix::Dense::Zero(k.rows(), k.rows());
        y.col(0) = k.col(c).normalized();
        out.emplace_back(std::move(y));
      }
    }
    return out;
  }

  /// y lies in the linear span of {x}'' (least-squares residual <= 10 eps_eq).
  bool in_bicommutant(const Element& x, const Element& y, const Tolerance& tol) const {
    return matrix::bicommutant(x, tol).contains(y, Tolerance{10 * tol.eps_eq, tol.eps_psd, tol.probe_count});
  }
};

/// Countable/co-countable step functions on [0, 1].
struct StepFnModel {
  using Element = stepfn::StepFunction;
  static constexpr bool has_commutant = false;
  static constexpr bool has_symbolic_tail = true;

  std::size_t max_exceptions = 8;

  std::string name() const { return "stepfn"; }
  nlohmann::json descriptor() const {
    return {{"model", name()},
            {"max_exceptions", max_exceptions},
            {"has_commutant", has_commutant},
            {"has_symbolic_tail", has_symbolic_tail}};
  }

  Element one() const { return Element::constant(1.0); }
  Element zero() const { return Element::constant(0.0); }
  Element random_element(std::mt19937_64& rng) const {
    return random::fn::step_function(random::fn::Shape::General, rng, max_exceptions);
  }
  Element random_hermitian(std::mt19937_64& rng) const {
    return random::fn::step_function(random::fn::Shape::Hermitian, rng, max_exceptions);
  }
  Element random_positive(std::mt19937_64& rng) const {
    return random::fn::step_function(random::fn::Shape::Positive, rng, max_exceptions);
  }
  /// Positive tails a + b/n peak at n = 1, which is a probe point, so scaling
  /// by the probe maximum gives 0 <= p <= 1 everywhere.
  Element random_unit_positive(std::mt19937_64& rng) const {
    const Element p = random_positive(rng);
    return (1.0 / std::max(1.0, entrywise_bound(p))) * p;
  }
  Element random_annihilator_case(std::mt19937_64& rng) const { return random_element(rng); }

  /// Point indicators on the probe set of x and a few fresh points, plus 1.
  std::vector<Element> annihilator_probes(const Element& x, std::size_t probe_count = Tolerance{}.probe_count) const {
    auto points = x.probe_points(probe_count);
    for (std::uint64_t k = 0; k <= 8; ++k) points.insert(stepfn::Point::fraction(k, 8));
    return stepfn::detail::spanning_probes(points);
  }

  /// The algebra is commutative, so {x}'' is the whole algebra.
  bool in_bicommutant(const Element&, const Element&, const Tolerance&) const { return true; }
};

}  // namespace rickart

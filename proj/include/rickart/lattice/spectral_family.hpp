#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "rickart/core/report.hpp"
#include "rickart/io/to_json.hpp"
#include "rickart/lattice/positive_part.hpp"
#include "rickart/matrix/model.hpp"
#include "rickart/stepfn/model.hpp"

namespace rickart {

/// Eigenvalues closer than this are merged before sublevel selection.
inline constexpr double kClusterGap = 1e-6;

/// e(lambda) for every real lambda: the projection onto the strict sublevel
/// set {spectrum < lambda}. Between consecutive breakpoints the family is
/// constant; steps[k] is its value on (breakpoints[k-1], breakpoints[k]],
/// with steps.front() = 0 and steps.back() = 1.
template <class E>
class SpectralFamily {
 public:
  struct Evaluation {
    const E& projection;
    double effective_lambda;
    bool perturbed;  // lambda fell within kClusterGap of a breakpoint
  };

  SpectralFamily(E element, std::vector<double> breakpoints, std::vector<E> steps, double cluster_gap)
      : element_(std::move(element)),
        breakpoints_(std::move(breakpoints)),
        steps_(std::move(steps)),
        gap_(cluster_gap) {}

  const E& element() const { return element_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<E>& steps() const { return steps_; }
  double min_spectrum() const { return breakpoints_.front(); }
  double max_spectrum() const { return breakpoints_.back(); }

  /// Number of breakpoints strictly below lambda.
  std::size_t interval_index(double lambda) const {
    return static_cast<std::size_t>(std::lower_bound(breakpoints_.begin(), breakpoints_.end(), lambda) -
                                    breakpoints_.begin());
  }

  const E& at(double lambda) const { return steps_[interval_index(lambda)]; }

  /// Evaluation with the outward-perturbation report: lambda within the
  /// cluster gap of a breakpoint c is moved to c - gap (if lambda <= c) or
  /// c + gap (if lambda > c), which selects the same projection as the strict
  /// comparison.
  Evaluation evaluate(double lambda) const {
    double eff = lambda;
    bool perturbed = false;
    for (double c : breakpoints_) {
      if (std::abs(lambda - c) < gap_) {
        eff = lambda <= c ? c - gap_ : c + gap_;
        perturbed = true;
        break;
      }
    }
    return {steps_[interval_index(eff)], eff, perturbed};
  }

  /// lambda grid used for verification: breakpoints, midpoints, and one point
  /// beyond each end.
  std::vector<double> probe_lambdas() const {
    std::vector<double> out;
    const double span = std::max(1.0, max_spectrum() - min_spectrum());
    out.push_back(min_spectrum() - span);
    for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
      out.push_back(breakpoints_[k]);
      if (k + 1 < breakpoints_.size()) out.push_back(0.5 * (breakpoints_[k] + breakpoints_[k + 1]));
    }
    out.push_back(max_spectrum() + 0.5 * std::max(gap_, 1e-3));
    out.push_back(max_spectrum() + span);
    return out;
  }

 private:
  E element_;
  std::vector<double> breakpoints_;
  std::vector<E> steps_;
  double gap_;
};

/// Eigen route: cluster the spectrum and accumulate cluster projectors.
inline SpectralFamily<matrix::MatrixElement> spectral_family(const matrix::MatrixElement& x, const Tolerance& tol = {}) {
  using matrix::MatrixElement;
  const auto clusters = matrix::eigen_clusters(matrix::eig_hermitian(x, tol), kClusterGap);
  std::vector<double> bps;
  std::vector<MatrixElement> steps{MatrixElement::zero(x.dim())};
  for (const auto& c : clusters) {
    bps.push_back(c.value);
    steps.push_back(matrix::hermitize(steps.back() + c.projector));
  }
  steps.back() = MatrixElement::identity(x.dim());
  return {x, std::move(bps), std::move(steps), kClusterGap};
}

namespace stepfn {

/// Indicator of {t : Re f(t) < lambda}. On the tail, with d = Re f - lambda,
/// the indicator is supp(sqrt(d d) - d): sqrt(d d) = |d| exactly in floating
/// point, so the argument is 2|d| for d < 0 and 0 for d >= 0.
inline StepFunction strict_sublevel(const StepFunction& f, double lambda) {
  auto scalar = [lambda](Complex v) { return v.real() < lambda ? Complex(1.0) : Complex(0.0); };
  auto expr = [lambda](const TailExpr& t) {
    const TailExpr d = TailExpr::constant(0.5) * (t + t.conj()) + TailExpr::constant(-lambda);
    return ((d * d).sqrt_nonneg() - d).supp();
  };
  return f.map(scalar, expr);
}

}  // namespace stepfn

/// Pointwise route: breakpoints are the distinct values on the probe set.
inline SpectralFamily<stepfn::StepFunction> spectral_family(const stepfn::StepFunction& x, const Tolerance& tol = {}) {
  using stepfn::StepFunction;
  if (!is_hermitian(x, tol)) throw Error(ErrorKind::NotHermitian, "spectral_family requires x* = x");
  std::set<double> values;
  for (auto v : stepfn::probe_values(x, tol.probe_count)) values.insert(v.real());
  std::vector<double> bps(values.begin(), values.end());
  std::vector<StepFunction> steps{StepFunction::constant(0.0)};
  for (std::size_t k = 0; k + 1 < bps.size(); ++k)
    steps.push_back(stepfn::strict_sublevel(x, 0.5 * (bps[k] + bps[k + 1])));
  steps.push_back(StepFunction::constant(1.0));
  // Tail values off the probe set may lie outside [min, max]; the family is
  // exact on the probe set.
  return {x, std::move(bps), std::move(steps), 0.0};
}

/// Annihilator route: e(lambda) = RP((lambda 1 - x) v 0), independent of the
/// eigen/pointwise construction.
template <RoStarElement E>
E sublevel_projection(const E& x, double lambda, const Tolerance& tol = {}) {
  const E r = right_projection(positive_part(lambda * one_like(x) - x, tol), tol);
  return r;
}

/// Checks properties (a)-(e) of a spectral family on its lambda grid, plus
/// projection laws, commutation, and agreement with the annihilator route.
template <RoStarElement E>
AxiomReport verify_spectral_family(const SpectralFamily<E>& fam, const Tolerance& tol = {}) {
  AxiomReport report;
  const E& x = fam.element();
  const E one = one_like(x);
  const E zero = zero_like(x);
  const Tolerance loose{10 * tol.eps_eq, tol.eps_psd, tol.probe_count};
  const auto lambdas = fam.probe_lambdas();
  auto witness = [&](double lambda) {
    return nlohmann::json{{"element", element_json(x)}, {"lambda", lambda}};
  };

  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const double l = lambdas[i];
    const E& e = fam.at(l);
    report.check("family.projection", approx_equal(e * e, e, loose) && approx_equal(star(e), e, loose),
                 [&] { return witness(l); });
    report.check("family.commutes", approx_equal(e * x, x * e, loose), [&] { return witness(l); });
    for (std::size_t j = 0; j < i; ++j) {
      const E& g = fam.at(lambdas[j]);
      report.check("family.mutually_commute", approx_equal(e * g, g * e, loose), [&] { return witness(l); });
    }
    if (i + 1 < lambdas.size())
      report.check("a.monotone", leq(e, fam.at(lambdas[i + 1]), tol), [&] { return witness(l); },
                   "e(lambda) <= e(mu) for lambda <= mu");
    if (l <= fam.min_spectrum())
      report.check("b.bottom", approx_equal(e, zero, loose), [&] { return witness(l); },
                   "e(lambda) = 0 for lambda <= min spectrum");
    if (l > fam.max_spectrum())
      report.check("c.top", approx_equal(e, one, loose), [&] { return witness(l); },
                   "e(lambda) = 1 for lambda > max spectrum");

    // sup_{mu < lambda} e(mu): the family is constant on (previous breakpoint, lambda).
    const auto& bps = fam.breakpoints();
    const auto below = std::lower_bound(bps.begin(), bps.end(), l);
    const double prev = below == bps.begin() ? l - 1.0 : *(below - 1);
    const double mu = l - 0.5 * (l - prev);
    report.check("d.left_continuity", approx_equal(fam.at(mu), e, loose), [&] { return witness(l); },
                 "sup_{mu<lambda} e(mu) = e(lambda)");

    const E ex = e * x;
    const E perp = one - e;
    const E px = perp * x;
    report.check("e.compression",
                 leq(0.5 * (ex + star(ex)), l * e, tol) && leq(l * perp, 0.5 * (px + star(px)), tol),
                 [&] { return witness(l); }, "e x <= lambda e and (1 - e) x >= lambda (1 - e)");

    report.check("family.annihilator_route", approx_equal(sublevel_projection(x, l, tol), e, loose),
                 [&] { return witness(l); }, "eigen/pointwise route agrees with RP((lambda - x) v 0)");
  }
  return report;
}

}  // namespace rickart

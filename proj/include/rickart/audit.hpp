#pragma once

#include <cmath>
#include <concepts>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rickart/core/algebra.hpp"
#include "rickart/core/report.hpp"
#include "rickart/core/series.hpp"
#include "rickart/io/to_json.hpp"

namespace rickart {

/// What the audit harness needs from a model: samplers for the element
/// classes it quantifies over, a spanning set of right factors for the
/// annihilator check, and a bicommutant membership test.
template <class M>
concept AuditModel = requires(const M& m, std::mt19937_64& rng, const typename M::Element& x, const Tolerance& tol) {
  requires RoStarElement<typename M::Element>;
  { M::has_commutant } -> std::convertible_to<bool>;
  { m.descriptor() } -> std::convertible_to<nlohmann::json>;
  { m.one() } -> std::same_as<typename M::Element>;
  { m.zero() } -> std::same_as<typename M::Element>;
  { m.random_element(rng) } -> std::same_as<typename M::Element>;
  { m.random_hermitian(rng) } -> std::same_as<typename M::Element>;
  { m.random_positive(rng) } -> std::same_as<typename M::Element>;
  { m.random_unit_positive(rng) } -> std::same_as<typename M::Element>;
  { m.random_annihilator_case(rng) } -> std::same_as<typename M::Element>;
  { m.annihilator_probes(x) } -> std::same_as<std::vector<typename M::Element>>;
  { m.in_bicommutant(x, x, tol) } -> std::convertible_to<bool>;
};

/// Randomized audit of the RO*-algebra axioms on a model:
///   (i)   K + K in K, lambda K in K, K ^ (-K) = {0}, and the order laws;
///   (ii)  PSR: sqrt(x)^2 = x, sqrt(x) in K, sqrt(x) in {x}'';
///   (iii) FR: dominated positive series have a least upper bound of their
///         partial sums;
///   (iv)  Rickart: r(x) = (1 - RP(x)) T on a spanning set of right factors.
/// Elements in `asserted_positive` are checked for membership in K; each
/// non-member is reported with itself as witness.
template <AuditModel M>
AxiomReport audit_axioms(const M& model, std::uint64_t seed, std::size_t samples, const Tolerance& tol = {},
                         const std::vector<typename M::Element>& asserted_positive = {}) {
  using E = typename M::Element;
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "audit_axioms requires samples >= 1");
  tol.checked();
  AxiomReport report(seed, samples);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Tolerance tol10{10 * tol.eps_eq, tol.eps_psd, tol.probe_count};
  const E zero = model.zero();

  for (std::size_t k = 0; k < asserted_positive.size(); ++k) {
    const E& x = asserted_positive[k];
    report.check(
        "cone.asserted_positive", in_cone(x, tol),
        [&] { return nlohmann::json{{"index", k}, {"element", element_json(x)}}; }, "asserted element lies in K");
  }

  for (std::size_t s = 0; s < samples; ++s) {
    auto witness = [&](std::initializer_list<std::pair<const char*, const E*>> elems) {
      nlohmann::json w = {{"seed", seed}, {"sample", s}, {"model", model.descriptor()}};
      for (const auto& [name, e] : elems) w[name] = element_json(*e);
      return w;
    };

    // (i) cone and order.
    const E x = model.random_positive(rng);
    const E y = model.random_positive(rng);
    const E h = model.random_hermitian(rng);
    const E c = model.random_element(rng);
    const double lambda = 10.0 * unit(rng);
    report.check("cone.sum_closed", in_cone(x + y, tol), [&] { return witness({{"x", &x}, {"y", &y}}); },
                 "K + K in K");
    report.check("cone.scale_closed", in_cone(lambda * x, tol),
                 [&] {
                   auto w = witness({{"x", &x}});
                   w["lambda"] = lambda;
                   return w;
                 },
                 "lambda K in K for lambda >= 0");
    const E tiny = 1e-12 * h;
    for (const E* z : {&x, &h, &tiny, &zero}) {
      const bool both = in_cone(*z, tol) && in_cone(-*z, tol);
      report.check("cone.proper", !both || approx_equal(*z, zero, tol), [&] { return witness({{"x", z}}); },
                   "x in K and -x in K imply x = 0");
    }
    report.check("order.reflexive", leq(h, h, tol), [&] { return witness({{"x", &h}}); });
    const E hx = h + x;
    const E hxy = hx + y;
    report.check("order.transitive", !(leq(h, hx, tol) && leq(hx, hxy, tol)) || leq(h, hxy, tol),
                 [&] { return witness({{"x", &h}, {"y", &hx}, {"z", &hxy}}); });
    report.check("order.antisymmetric", !(leq(h, hx, tol) && leq(hx, h, tol)) || approx_equal(h, hx, tol),
                 [&] { return witness({{"x", &h}, {"y", &hx}}); });
    report.check("order.translation", !leq(h, hx, tol) || leq(h + y, hx + y, tol),
                 [&] { return witness({{"x", &h}, {"y", &hx}, {"z", &y}}); });
    const E cxc = star(c) * x * c;
    const Tolerance scaled{tol.eps_eq, tol.eps_psd * std::max(1.0, entrywise_bound(cxc)), tol.probe_count};
    report.check("order.star_congruence", in_cone(cxc, scaled), [&] { return witness({{"x", &x}, {"c", &c}}); },
                 "0 <= x implies 0 <= c* x c");

    // (ii) PSR.
    const E r = sqrt_psd(x, tol);
    report.check("psr.square", approx_equal(r * r, x, tol10), [&] { return witness({{"x", &x}}); },
                 "sqrt(x)^2 = x within 10 eps_eq");
    report.check("psr.positive", in_cone(r, tol), [&] { return witness({{"x", &x}}); }, "sqrt(x) in K");
    if constexpr (M::has_commutant) {
      report.check("psr.bicommutant", model.in_bicommutant(x, r, tol), [&] { return witness({{"x", &x}}); },
                   "sqrt(x) in {x}''");
    }

    // (iii) FR.
    DominatedSeries<E> series;
    std::uniform_int_distribution<std::size_t> len(1, 5);
    const std::size_t m = len(rng);
    for (std::size_t n = 1; n <= m; ++n) {
      const double eps = std::ldexp(0.5 + 0.5 * unit(rng), -static_cast<int>(n));
      series.terms.push_back(eps * model.random_unit_positive(rng));
      series.eps.push_back(eps);
    }
    const double ratio = 0.1 + 0.8 * unit(rng);
    const double tail_eps = series.eps.back();
    series.tail = GeometricTail<E>{ratio, tail_eps * model.random_unit_positive(rng), tail_eps};
    const E sup = fr_sup(series, tol);
    double eps_total = 0;
    for (double e : series.eps) eps_total += e;
    eps_total += tail_eps * series.tail_factor();
    auto series_witness = [&] {
      nlohmann::json w = witness({{"sup", &sup}});
      w["terms"] = nlohmann::json::array();
      for (const auto& t : series.terms) w["terms"].push_back(element_json(t));
      w["eps"] = series.eps;
      w["tail"] = {{"ratio", ratio}, {"term", element_json(series.tail->term)}, {"eps", tail_eps}};
      return w;
    };
    report.check("fr.bounded", leq(sup, eps_total * model.one(), tol), series_witness, "sup <= (sum eps_n) 1");
    double rest = eps_total;
    E partial = zero;
    for (std::size_t k = 0; k <= m + 4; ++k) {
      if (k > 0) {
        partial = partial + series.term(k);
        rest -= series.eps_at(k);
      }
      report.check("fr.upper_bound", leq(partial, sup, tol), series_witness, "s_k <= sup");
      report.check("fr.least", leq(sup, partial + std::max(rest, 0.0) * model.one(), tol), series_witness,
                   "sup <= s_k + (sum_{n>k} eps_n) 1");
    }

    // (iv) Rickart.
    const E a = model.random_annihilator_case(rng);
    const E e = right_projection(a, tol);
    report.check("rickart.projection", approx_equal(e * e, e, tol) && approx_equal(star(e), e, tol),
                 [&] { return witness({{"x", &a}}); }, "RP(x) is a projection");
    report.check("rickart.fixes", approx_equal(a * e, a, tol10), [&] { return witness({{"x", &a}}); },
                 "x RP(x) = x");
    for (const E& probe : model.annihilator_probes(a)) {
      const bool annihilated = approx_equal(a * probe, zero, tol);
      const bool in_complement = approx_equal(e * probe, zero, tol);
      report.check("rickart.annihilator", annihilated == in_complement,
                   [&] { return witness({{"x", &a}, {"y", &probe}}); }, "x y = 0 iff RP(x) y = 0");
    }
  }
  return report;
}

}  // namespace rickart

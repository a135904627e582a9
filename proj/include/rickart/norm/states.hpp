#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "rickart/matrix/eig.hpp"
#include "rickart/norm/order_norm.hpp"
#include "rickart/stepfn/step_function.hpp"

namespace rickart {

namespace matrix {

/// Vector state phi(x) = <xi, x xi> for a unit vector xi.
struct VectorState {
  Vector xi;
};

inline Complex evaluate(const VectorState& s, const MatrixElement& x) { return s.xi.dot(x.dense() * s.xi); }

inline std::vector<VectorState> sample_states(std::size_t n, std::size_t count, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<VectorState> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Vector v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(normal(rng), normal(rng));
    out.push_back({v.normalized()});
  }
  return out;
}

/// The default sweep: `count` random vector states of the right dimension.
inline std::vector<VectorState> sample_states_for(const MatrixElement& x, std::mt19937_64& rng, const Tolerance& = {},
                                                  std::size_t count = 256) {
  return sample_states(x.dim(), count, rng);
}

/// Eigenvectors of x* x: the top one attains sup phi(x* x) = ||x||^2.
inline std::vector<VectorState> extremal_states(const MatrixElement& x, const Tolerance& tol = {}) {
  const auto eig = eig_hermitian(hermitize(star(x) * x), tol);
  std::vector<VectorState> out;
  for (Eigen::Index k = eig.vectors.cols() - 1; k >= 0; --k) out.push_back({eig.vectors.col(k)});
  return out;
}

}  // namespace matrix

namespace stepfn {

/// A finitely supported probability measure: mass on the default value (a
/// co-countable "generic" point) plus masses on finitely many points.
struct ProbeState {
  double default_weight = 1.0;
  std::map<Point, double> weights;
};

inline Complex evaluate(const ProbeState& s, const StepFunction& f) {
  Complex acc = s.default_weight * f.default_value();
  for (const auto& [t, w] : s.weights) acc += w * f.at(t);
  return acc;
}

/// Random weightings over the probe points of f plus the default atom.
inline std::vector<ProbeState> sample_states(const StepFunction& f, std::size_t count, std::mt19937_64& rng,
                                             const Tolerance& tol = {}) {
  std::exponential_distribution<double> expo(1.0);
  const auto points = f.probe_points(tol.probe_count);
  std::vector<ProbeState> out;
  for (std::size_t k = 0; k < count; ++k) {
    ProbeState s;
    double total = s.default_weight = expo(rng);
    for (const auto& t : points) total += s.weights[t] = expo(rng);
    s.default_weight /= total;
    for (auto& [_, w] : s.weights) w /= total;
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<ProbeState> sample_states_for(const StepFunction& f, std::mt19937_64& rng, const Tolerance& tol = {},
                                                 std::size_t count = 256) {
  return sample_states(f, count, rng, tol);
}

/// Point masses at the default and at each probe point.
inline std::vector<ProbeState> extremal_states(const StepFunction& f, const Tolerance& tol = {}) {
  std::vector<ProbeState> out{ProbeState{1.0, {}}};
  for (const auto& t : f.probe_points(tol.probe_count)) out.push_back(ProbeState{0.0, {{t, 1.0}}});
  return out;
}

}  // namespace stepfn

/// sup over the given states of sqrt(phi(x* x)). Always a lower bound for
/// the order norm; equal to it once the states include an extremal one.
template <RoStarElement E, class State>
double state_norm(const E& x, const std::vector<State>& states, const Tolerance& tol = {}) {
  if (states.empty()) throw Error(ErrorKind::NoStates, "state_norm requires at least one state");
  if (!is_bounded(x, tol)) throw Error(ErrorKind::NotBounded, "state_norm requires a bounded element");
  const E xx = star(x) * x;
  double best = 0;
  for (const auto& s : states) best = std::max(best, std::sqrt(std::max(0.0, evaluate(s, xx).real())));
  return best;
}

/// phi(y* x* x y) <= ||x* x|| phi(y* y), the inequality that makes the GNS
/// representation bounded.
template <RoStarElement E, class State>
bool gns_inequality(const E& x, const E& y, const State& phi, const Tolerance& tol = {}) {
  const double lhs = evaluate(phi, star(y) * star(x) * x * y).real();
  const double yy = evaluate(phi, star(y) * y).real();
  const double bound = order_norm(star(x) * x, tol) * yy;
  return lhs <= bound + tol.eps_psd * std::max(1.0, std::abs(bound));
}

/// phi(1) = 1, phi(x* x) >= -eps_psd on the probe element, and linearity on a
/// sampled combination.
template <RoStarElement E, class State>
bool is_state(const State& phi, const E& x, const E& y, const Tolerance& tol = {}) {
  const bool normalized = std::abs(evaluate(phi, one_like(x)) - std::complex<double>(1.0)) <= tol.eps_eq;
  const bool positive = evaluate(phi, star(x) * x).real() >= -tol.eps_psd;
  const std::complex<double> a(0.3, -1.2);
  const bool linear = std::abs(evaluate(phi, x + a * y) - (evaluate(phi, x) + a * evaluate(phi, y))) <=
                      tol.eps_eq * std::max(1.0, std::abs(evaluate(phi, x)) + std::abs(evaluate(phi, y)));
  return normalized && positive && linear;
}

}  // namespace rickart

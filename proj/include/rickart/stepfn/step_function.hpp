#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rickart/core/tolerance.hpp"
#include "rickart/stepfn/point.hpp"
#include "rickart/stepfn/tail_expr.hpp"

namespace rickart::stepfn {

/// An F-measurable function on X = [0, 1] for the countable/co-countable
/// sigma-algebra F, in finite presentation:
///
///   f(t) = exceptions[t]   if t is an exception key,
///          tail(n)         else if t = p_n = 1/(n+2) and a tail is present,
///          default         otherwise.
///
/// Every such f is constant off a countable set, so it is F-measurable.
/// Exceptions that coincide with the value the point would otherwise take are
/// dropped on construction, so the presentation is canonical for a given tail.
class StepFunction {
 public:
  StepFunction() = default;
  explicit StepFunction(Complex default_value, std::map<Point, Complex> exceptions = {},
                        std::optional<TailExpr> tail = std::nullopt)
      : default_(default_value), exceptions_(std::move(exceptions)), tail_(std::move(tail)) {
    normalize();
  }

  static StepFunction constant(Complex c) { return StepFunction(c); }
  /// Indicator of a single point.
  static StepFunction delta(const Point& t, Complex scale = 1.0) { return StepFunction(0.0, {{t, scale}}); }

  Complex default_value() const { return default_; }
  const std::map<Point, Complex>& exceptions() const { return exceptions_; }
  const std::optional<TailExpr>& tail() const { return tail_; }
  bool has_tail() const { return tail_.has_value(); }

  /// Value at t under the override rule above.
  Complex at(const Point& t) const {
    if (auto it = exceptions_.find(t); it != exceptions_.end()) return it->second;
    return base_at(t);
  }

  /// Value at t ignoring explicit exceptions.
  Complex base_at(const Point& t) const {
    if (tail_) {
      if (auto n = t.tail_index()) return tail_->eval(*n);
    }
    return default_;
  }

  /// The finite probe set: exception keys plus, when a tail is present, p_1..p_probe_count.
  std::set<Point> probe_points(std::size_t probe_count) const {
    std::set<Point> out;
    for (const auto& [t, _] : exceptions_) out.insert(t);
    if (tail_)
      for (std::size_t n = 1; n <= probe_count; ++n) out.insert(Point::reserved(n));
    return out;
  }

  /// Applies a scalar map pointwise (with its expression counterpart on the tail).
  template <class ScalarFn, class ExprFn>
  StepFunction map(ScalarFn&& fs, ExprFn&& fe) const {
    std::map<Point, Complex> exc;
    for (const auto& [t, v] : exceptions_) exc.emplace(t, fs(v));
    std::optional<TailExpr> tail;
    if (tail_) tail = fe(*tail_);
    return StepFunction(fs(default_), std::move(exc), std::move(tail));
  }

  /// Combines two functions pointwise. Exception supports are merged and each
  /// merged point is evaluated on both sides with the full rule; tails are
  /// combined as expression trees, a missing tail standing for its default.
  template <class ScalarFn, class ExprFn>
  static StepFunction zip(const StepFunction& f, const StepFunction& g, ScalarFn&& fs, ExprFn&& fe) {
    std::map<Point, Complex> exc;
    for (const auto& [t, _] : f.exceptions_) exc.emplace(t, fs(f.at(t), g.at(t)));
    for (const auto& [t, _] : g.exceptions_) exc.emplace(t, fs(f.at(t), g.at(t)));
    std::optional<TailExpr> tail;
    if (f.tail_ || g.tail_) tail = fe(f.tail_or_default(), g.tail_or_default());
    return StepFunction(fs(f.default_, g.default_), std::move(exc), std::move(tail));
  }

  TailExpr tail_or_default() const { return tail_ ? *tail_ : TailExpr::constant(default_); }

  friend StepFunction operator+(const StepFunction& f, const StepFunction& g) {
    return zip(f, g, std::plus<Complex>{}, [](const TailExpr& a, const TailExpr& b) { return a + b; });
  }
  friend StepFunction operator*(const StepFunction& f, const StepFunction& g) {
    return zip(f, g, std::multiplies<Complex>{}, [](const TailExpr& a, const TailExpr& b) { return a * b; });
  }
  friend StepFunction operator*(Complex a, const StepFunction& f) {
    return f.map([a](Complex v) { return a * v; }, [a](const TailExpr& e) { return TailExpr::constant(a) * e; });
  }
  friend StepFunction operator*(double a, const StepFunction& f) { return Complex(a, 0.0) * f; }
  friend StepFunction operator-(const StepFunction& f) { return -1.0 * f; }
  friend StepFunction operator-(const StepFunction& f, const StepFunction& g) { return f + (-g); }

  StepFunction star() const {
    return map([](Complex v) { return std::conj(v); }, [](const TailExpr& e) { return e.conj(); });
  }

 private:
  void normalize() {
    if (tail_ && tail_->is_const(default_)) tail_.reset();
    for (auto it = exceptions_.begin(); it != exceptions_.end();) {
      if (it->second == base_at(it->first)) it = exceptions_.erase(it);
      else ++it;
    }
  }

  Complex default_{0.0, 0.0};
  std::map<Point, Complex> exceptions_;
  std::optional<TailExpr> tail_;
};

inline StepFunction star(const StepFunction& f) { return f.star(); }
inline StepFunction one_like(const StepFunction&) { return StepFunction::constant(1.0); }
inline StepFunction zero_like(const StepFunction&) { return StepFunction::constant(0.0); }

/// Visits the default value and the value at every probe point of f and g.
template <class Fn>
bool all_probes(const StepFunction& f, const StepFunction& g, std::size_t probe_count, Fn&& fn) {
  if (!fn(f.default_value(), g.default_value())) return false;
  auto points = f.probe_points(probe_count);
  points.merge(g.probe_points(probe_count));
  for (const auto& t : points)
    if (!fn(f.at(t), g.at(t))) return false;
  return true;
}

template <class Fn>
bool all_probes(const StepFunction& f, std::size_t probe_count, Fn&& fn) {
  if (!fn(f.default_value())) return false;
  for (const auto& t : f.probe_points(probe_count))
    if (!fn(f.at(t))) return false;
  return true;
}

/// Probewise equality within eps_eq. Exact extensional equality for tail-free
/// functions; probe semantics (n <= probe_count) for tails.
inline bool approx_equal(const StepFunction& f, const StepFunction& g, const Tolerance& tol = {}) {
  return all_probes(f, g, tol.probe_count, [&](Complex a, Complex b) { return std::abs(a - b) <= tol.eps_eq; });
}

inline double distance(const StepFunction& f, const StepFunction& g, const Tolerance& tol = {}) {
  double d = 0;
  all_probes(f, g, tol.probe_count, [&](Complex a, Complex b) {
    d = std::max(d, std::abs(a - b));
    return true;
  });
  return d;
}

inline bool is_real_value(Complex v, const Tolerance& tol) { return std::abs(v.imag()) <= tol.eps_eq; }

inline bool is_hermitian(const StepFunction& f, const Tolerance& tol = {}) {
  return all_probes(f, tol.probe_count, [&](Complex v) { return is_real_value(v, tol); });
}

/// Membership in K: every value real and >= -eps_psd. Pointwise, a value
/// v >= 0 is |sqrt v|^2, so this is exactly the sums-of-squares cone.
inline bool in_cone(const StepFunction& f, const Tolerance& tol = {}) {
  return all_probes(f, tol.probe_count,
                    [&](Complex v) { return is_real_value(v, tol) && v.real() >= -tol.eps_psd; });
}

/// Pointwise positive square root.
inline StepFunction sqrt_psd(const StepFunction& f, const Tolerance& tol = {}) {
  if (!in_cone(f, tol)) throw Error(ErrorKind::NotPositive, "sqrt_psd requires f in K");
  return f.map([](Complex v) { return TailExpr::sqrt_nonneg(v); }, [](const TailExpr& e) { return e.sqrt_nonneg(); });
}

/// Pointwise reciprocal where nonzero.
inline StepFunction recip_nonzero(const StepFunction& f) {
  return f.map([](Complex v) { return TailExpr::recip(v); }, [](const TailExpr& e) { return e.recip(); });
}

/// RP(f): the indicator of the support {t : f(t) != 0}. Then f * RP(f) = f and
/// g * f = 0 pointwise iff RP(f) * g = 0. The support is countable or
/// co-countable, so the indicator is F-measurable.
inline StepFunction right_projection(const StepFunction& f, const Tolerance& = {}) {
  auto indicator = [](Complex v) { return v == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : Complex(1.0, 0.0); };
  return f.map(indicator, [](const TailExpr& e) { return e.supp(); });
}

/// Values reached on the probe set (default plus probe points).
inline std::vector<Complex> probe_values(const StepFunction& f, std::size_t probe_count) {
  std::vector<Complex> out{f.default_value()};
  for (const auto& t : f.probe_points(probe_count)) out.push_back(f.at(t));
  return out;
}

/// max |value| over the probe set.
inline double entrywise_bound(const StepFunction& f, std::size_t probe_count = Tolerance{}.probe_count) {
  double b = 0;
  for (auto v : probe_values(f, probe_count)) b = std::max(b, std::abs(v));
  return b;
}

/// Growth heuristic for symbolic tails. The tail is sampled at n = 1..P and at
/// the dyadic points P*2^j, j = 1..20. The function is declared unbounded when
/// the dyadic samples grow strictly over the last 8 steps and the last one
/// exceeds twice the largest probe-set value. Tail-free functions are bounded.
inline bool is_bounded(const StepFunction& f, const Tolerance& tol = {}) {
  if (!f.has_tail()) return true;
  const double probe_max = entrywise_bound(f, tol.probe_count);
  std::vector<double> samples;
  std::uint64_t n = tol.probe_count;
  for (int j = 1; j <= 20; ++j) {
    n *= 2;
    const double v = std::abs(f.tail()->eval(n));
    if (!std::isfinite(v)) return false;
    samples.push_back(v);
  }
  bool growing = true;
  for (std::size_t k = samples.size() - 8; k < samples.size(); ++k) growing = growing && samples[k] > samples[k - 1];
  return !(growing && samples.back() > 2.0 * std::max(probe_max, 1e-300));
}

}  // namespace rickart::stepfn

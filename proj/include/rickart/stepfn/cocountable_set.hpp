#pragma once

#include <algorithm>
#include <iterator>
#include <set>
#include <string>

#include "rickart/stepfn/step_function.hpp"

namespace rickart::stepfn {

enum class SetTag { Countable, CoCountable };

inline std::string to_string(SetTag t) { return t == SetTag::Countable ? "Countable" : "CoCountable"; }

/// A member of the countable/co-countable sigma-algebra in finite
/// presentation: Countable(P) is P itself, CoCountable(P) is X \ P.
/// Boolean operations stay inside the type by case analysis on the tags.
class CocountableSet {
 public:
  CocountableSet() = default;
  CocountableSet(SetTag tag, std::set<Point> points) : tag_(tag), points_(std::move(points)) {}

  static CocountableSet empty() { return {SetTag::Countable, {}}; }
  static CocountableSet whole() { return {SetTag::CoCountable, {}}; }

  SetTag tag() const { return tag_; }
  const std::set<Point>& points() const { return points_; }

  bool contains(const Point& t) const { return (points_.count(t) != 0) == (tag_ == SetTag::Countable); }

  CocountableSet complement() const {
    return {tag_ == SetTag::Countable ? SetTag::CoCountable : SetTag::Countable, points_};
  }

  CocountableSet unite(const CocountableSet& o) const {
    if (tag_ == SetTag::Countable && o.tag_ == SetTag::Countable) return {SetTag::Countable, set_union(points_, o.points_)};
    if (tag_ == SetTag::CoCountable && o.tag_ == SetTag::CoCountable)
      return {SetTag::CoCountable, set_intersection(points_, o.points_)};
    // Countable(P) u CoCountable(Q) = X \ (Q \ P)
    const auto& p = tag_ == SetTag::Countable ? points_ : o.points_;
    const auto& q = tag_ == SetTag::Countable ? o.points_ : points_;
    return {SetTag::CoCountable, set_difference(q, p)};
  }

  CocountableSet intersect(const CocountableSet& o) const { return complement().unite(o.complement()).complement(); }

  friend bool operator==(const CocountableSet& a, const CocountableSet& b) {
    return a.tag_ == b.tag_ && a.points_ == b.points_;
  }

 private:
  static std::set<Point> set_union(const std::set<Point>& a, const std::set<Point>& b) {
    std::set<Point> out(a);
    out.insert(b.begin(), b.end());
    return out;
  }
  static std::set<Point> set_intersection(const std::set<Point>& a, const std::set<Point>& b) {
    std::set<Point> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
  }
  static std::set<Point> set_difference(const std::set<Point>& a, const std::set<Point>& b) {
    std::set<Point> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
  }

  SetTag tag_ = SetTag::Countable;
  std::set<Point> points_;
};

/// The support {t : f(t) != 0}. Exact for tail-free functions; for tails the
/// reserved points are taken from the probe set n <= probe_count.
inline CocountableSet support(const StepFunction& f, std::size_t probe_count = Tolerance{}.probe_count) {
  const Complex zero(0.0, 0.0);
  std::set<Point> listed;
  if (f.default_value() != zero) {
    for (const auto& t : f.probe_points(probe_count))
      if (f.at(t) == zero) listed.insert(t);
    return {SetTag::CoCountable, std::move(listed)};
  }
  for (const auto& t : f.probe_points(probe_count))
    if (f.at(t) != zero) listed.insert(t);
  return {SetTag::Countable, std::move(listed)};
}

/// Indicator function of a set in the sigma-algebra.
inline StepFunction indicator(const CocountableSet& s) {
  const bool co = s.tag() == SetTag::CoCountable;
  std::map<Point, Complex> exc;
  for (const auto& t : s.points()) exc.emplace(t, co ? 0.0 : 1.0);
  return StepFunction(co ? 1.0 : 0.0, std::move(exc));
}

}  // namespace rickart::stepfn

#pragma once

#include <array>
#include <string>
#include <vector>

#include "rickart/core/report.hpp"
#include "rickart/stepfn/cocountable_set.hpp"
#include "rickart/stepfn/json.hpp"

namespace rickart::stepfn {

/// Cardinality class of a subset of [0, 1] relative to the sigma-algebra F.
enum class SetClass { Countable, CoCountable, Neither };

inline std::string to_string(SetClass c) {
  switch (c) {
    case SetClass::Countable: return "Countable";
    case SetClass::CoCountable: return "CoCountable";
    case SetClass::Neither: return "Neither";
  }
  return "?";
}

/// Class of every set representable as a CocountableSet. The switch is
/// exhaustive over SetTag; a new tag fails to compile under -Wswitch -Werror.
inline SetClass classify(SetTag tag) {
  switch (tag) {
    case SetTag::Countable: return SetClass::Countable;
    case SetTag::CoCountable: return SetClass::CoCountable;
  }
  return SetClass::Neither;
}

inline constexpr std::array<SetTag, 2> kAllSetTags{SetTag::Countable, SetTag::CoCountable};

/// A set given only by description, e.g. an interval, whose class is known
/// symbolically. Uncountable sets cannot be enumerated, so they are never
/// materialized.
struct SymbolicSet {
  std::string description;
  SetClass cls;

  SymbolicSet complement() const {
    const SetClass c = cls == SetClass::Countable     ? SetClass::CoCountable
                       : cls == SetClass::CoCountable ? SetClass::Countable
                                                      : SetClass::Neither;
    return {"[0,1] \\ (" + description + ")", c};
  }
};

namespace detail {

/// Spanning probe set for right-annihilator checks: point indicators at the
/// given points plus the constant 1.
inline std::vector<StepFunction> spanning_probes(const std::set<Point>& points) {
  std::vector<StepFunction> out{StepFunction::constant(1.0)};
  for (const auto& t : points) out.push_back(StepFunction::delta(t));
  return out;
}

/// Checks r(S) = e T on the spanning probes: y annihilates every s in S iff y = e y.
inline bool annihilator_generated_by(const std::vector<StepFunction>& family, const StepFunction& e,
                                     const std::set<Point>& points, const Tolerance& tol) {
  const StepFunction zero = StepFunction::constant(0.0);
  for (const auto& y : spanning_probes(points)) {
    bool annihilates = true;
    for (const auto& s : family) annihilates = annihilates && approx_equal(s * y, zero, tol);
    const bool in_et = approx_equal(e * y, y, tol);
    if (annihilates != in_et) return false;
  }
  // e itself must annihilate the family.
  for (const auto& s : family)
    if (!approx_equal(s * e, zero, tol)) return false;
  return true;
}

}  // namespace detail

/// Demonstrates that the countable/co-countable function algebra is Rickart
/// (annihilators of single elements and of countable families are generated
/// by projections) but not Baer.
///
/// For A = [0, 1/2] and S = { delta_t : t in A }, r(S) consists of the
/// functions vanishing on A. If r(S) = e T for a projection e, then e vanishes
/// on A (e is in r(S)) and e(t) = 1 for t outside A (delta_t is in r(S) = e T),
/// so supp(e) = X \ A. Every projection of the model is the indicator of a
/// Countable or CoCountable set, while X \ A is neither, so no such e exists.
inline AxiomReport not_baer_witness(const Tolerance& tol = {}) {
  AxiomReport report(0, 1);

  // Every representable projection has a Countable or CoCountable support.
  bool tags_ok = true;
  for (SetTag tag : kAllSetTags) {
    const CocountableSet s(tag, {Point::parse("0.5").value(), Point::reserved(1)});
    const StepFunction e = indicator(s);
    const bool is_proj = approx_equal(e * e, e, tol) && approx_equal(star(e), e, tol);
    const auto cls = classify(support(e, tol.probe_count).tag());
    tags_ok = tags_ok && is_proj && support(e, tol.probe_count) == s &&
              (cls == SetClass::Countable || cls == SetClass::CoCountable);
  }
  report.check("structure.projection_support_tags", tags_ok, [] { return nlohmann::json("tag case analysis"); },
               "every model projection is the indicator of a Countable or CoCountable set");

  // The uncountable family and the class of the would-be generator's support.
  const SymbolicSet a{"[0, 1/2]", SetClass::Neither};
  const SymbolicSet complement = a.complement();
  report.check("argument.complement_class", complement.cls == SetClass::Neither,
               [&] { return nlohmann::json(complement.description); },
               "X \\ A = " + complement.description + " has class " + to_string(complement.cls) +
                   ": both it and A contain intervals, so neither is countable");

  bool no_match = true;
  for (SetTag tag : kAllSetTags) no_match = no_match && classify(tag) != complement.cls;
  report.check("argument.no_generating_projection", no_match, [] { return nlohmann::json("a tag matched Neither"); },
               "r({delta_t : t in A}) would need a projection with support X \\ A; no tag has class Neither, "
               "so the annihilator of this subset is not generated by a projection: Rickart but not Baer");

  // Control: a countable family of point indicators has a supremum projection.
  {
    std::vector<StepFunction> family;
    std::set<Point> pts;
    StepFunction sup = StepFunction::constant(0.0);
    for (std::size_t n = 1; n <= tol.probe_count; ++n) {
      const Point p = Point::reserved(n);
      family.push_back(StepFunction::delta(p));
      pts.insert(p);
      sup = sup + StepFunction::delta(p);  // disjoint supports: the sum is the pointwise max
    }
    const auto supp = support(sup, tol.probe_count);
    const bool is_proj = approx_equal(sup * sup, sup, tol);
    auto probe_pts = pts;
    probe_pts.insert(Point::parse("0.5").value());
    const StepFunction e = StepFunction::constant(1.0) - sup;
    const bool generated = detail::annihilator_generated_by(family, e, probe_pts, tol);
    report.check("control.countable_family", is_proj && supp.tag() == SetTag::Countable && generated,
                 [&] { return to_json(sup); },
                 "sup of {delta_{p_n}} is the indicator of a Countable set and r(S) = (1 - sup) T");
  }

  // Control: a family whose support is co-countable.
  {
    const StepFunction f(1.0, {{Point::parse("0.5").value(), 0.0}, {Point::parse("0.25").value(), 0.0}});
    const StepFunction rp = right_projection(f, tol);
    const auto supp = support(rp, tol.probe_count);
    const StepFunction e = StepFunction::constant(1.0) - rp;
    std::set<Point> probe_pts{Point::parse("0.5").value(), Point::parse("0.25").value(), Point::parse("0.75").value()};
    const bool generated = detail::annihilator_generated_by({f}, e, probe_pts, tol);
    report.check("control.cocountable_family", supp.tag() == SetTag::CoCountable && generated,
                 [&] { return to_json(f); }, "r(f) = (1 - RP(f)) T with RP(f) the indicator of a CoCountable set");
  }
  return report;
}

}  // namespace rickart::stepfn

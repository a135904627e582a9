#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "rickart/rickart.hpp"

namespace {

using namespace rickart;
using stepfn::Complex;
using stepfn::Point;
using stepfn::StepFunction;
using stepfn::TailExpr;

Point pt(const char* label) { return Point::parse(label).value(); }

TEST(Point, ParsesDecimalsAndFractions) {
  EXPECT_EQ(pt("0.5"), pt("1/2"));
  EXPECT_EQ(pt(".25"), Point::fraction(1, 4));
  EXPECT_EQ(pt("1"), Point::fraction(1, 1));
  EXPECT_EQ(pt("0"), Point::fraction(0, 1));
  EXPECT_EQ(pt("2/6"), Point::fraction(1, 3));
}

TEST(Point, RejectsOutsideUnitInterval) {
  EXPECT_FALSE(Point::parse("1.5"));
  EXPECT_FALSE(Point::parse("3/2"));
  EXPECT_FALSE(Point::parse("-0.5"));
  EXPECT_FALSE(Point::parse("abc"));
  EXPECT_FALSE(Point::parse(""));
  EXPECT_FALSE(Point::parse("1/0"));
}

TEST(Point, ReservedTailPoints) {
  EXPECT_EQ(Point::reserved(1), Point::fraction(1, 3));
  EXPECT_EQ(Point::reserved(2).tail_index().value(), 2u);
  EXPECT_FALSE(pt("0.5").tail_index());
}

TEST(TailExpr, ParseAndEvaluate) {
  const TailExpr e = TailExpr::parse("2 + 1/n");
  EXPECT_DOUBLE_EQ(e.eval(1).real(), 3.0);
  EXPECT_DOUBLE_EQ(e.eval(4).real(), 2.25);
  EXPECT_DOUBLE_EQ(TailExpr::parse("sqrt(n*n)").eval(7).real(), 7.0);
  EXPECT_DOUBLE_EQ(TailExpr::parse("conj(i)").eval(1).imag(), -1.0);
  EXPECT_EQ(TailExpr::parse("supp(n - 3)").eval(3), Complex(0.0));
  EXPECT_EQ(TailExpr::parse("supp(n - 3)").eval(4), Complex(1.0));
  EXPECT_THROW(TailExpr::parse("2 +"), Error);
  EXPECT_THROW(TailExpr::parse("foo(n)"), Error);
}

TEST(TailExpr, RoundTrip) {
  for (const char* text : {"2 + 1/n", "n", "sqrt(n*n) - n", "recip(n + 0.5) * i", "-3.25*conj(n)", "supp(n - 3)"}) {
    const TailExpr e = TailExpr::parse(text);
    const TailExpr back = TailExpr::parse(e.to_string());
    for (std::uint64_t n = 1; n <= 10; ++n) EXPECT_EQ(e.eval(n), back.eval(n)) << text;
  }
}

TEST(StepFunction, OverrideRule) {
  const StepFunction f(2.0, {{pt("0.5"), 7.0}, {Point::reserved(1), 9.0}}, TailExpr::parse("n"));
  EXPECT_EQ(f.at(pt("0.25")), Complex(2.0));
  EXPECT_EQ(f.at(pt("0.5")), Complex(7.0));
  EXPECT_EQ(f.at(Point::reserved(1)), Complex(9.0));
  EXPECT_EQ(f.at(Point::reserved(5)), Complex(5.0));
}

TEST(StepFunction, MultiplyExample) {
  const StepFunction f(1.0, {{pt("0.5"), 0.0}});
  const StepFunction g(2.0, {{pt("0.25"), 3.0}});
  const StepFunction h = f * g;
  EXPECT_EQ(h.default_value(), Complex(2.0));
  EXPECT_EQ(h.at(pt("0.5")), Complex(0.0));
  EXPECT_EQ(h.at(pt("0.25")), Complex(3.0));
  EXPECT_EQ(h.exceptions().size(), 2u);
}

TEST(StepFunction, StarAndNegation) {
  EXPECT_EQ(star(StepFunction::constant(Complex(0, 1))).default_value(), Complex(0, -1));
  std::mt19937_64 rng(41);
  for (int s = 0; s < 50; ++s) {
    const auto f = random::fn::step_function(random::fn::Shape::General, rng);
    EXPECT_TRUE(approx_equal(f + (-1.0) * f, StepFunction::constant(0.0)));
    EXPECT_TRUE(approx_equal(star(star(f)), f));
  }
}

TEST(StepFunction, Normalization) {
  const StepFunction f(2.0, {{pt("0.5"), 2.0}});
  EXPECT_TRUE(f.exceptions().empty());
  const StepFunction g(2.0, {}, TailExpr::constant(2.0));
  EXPECT_FALSE(g.has_tail());
}

TEST(StepFunction, RightProjectionExamples) {
  const StepFunction a = right_projection(StepFunction(2.0, {{pt("0.5"), 0.0}}));
  EXPECT_EQ(a.default_value(), Complex(1.0));
  EXPECT_EQ(a.at(pt("0.5")), Complex(0.0));
  EXPECT_TRUE(approx_equal(right_projection(StepFunction::constant(0.0)), StepFunction::constant(0.0)));
  const StepFunction b = right_projection(StepFunction(0.0, {{pt("0.5"), 3.0}}));
  EXPECT_EQ(b.default_value(), Complex(0.0));
  EXPECT_EQ(b.at(pt("0.5")), Complex(1.0));
}

TEST(StepFunction, RightProjectionOfTail) {
  // n - 3 vanishes at p_3 only.
  const StepFunction f(1.0, {}, TailExpr::parse("n - 3"));
  const StepFunction e = right_projection(f);
  EXPECT_EQ(e.at(Point::reserved(3)), Complex(0.0));
  EXPECT_EQ(e.at(Point::reserved(4)), Complex(1.0));
  EXPECT_TRUE(approx_equal(f * e, f));
}

TEST(StepFunction, ConeAndSqrt) {
  const StepFunction f(4.0, {{pt("0.5"), 9.0}}, TailExpr::parse("1/n"));
  ASSERT_TRUE(in_cone(f));
  const StepFunction r = sqrt_psd(f);
  EXPECT_TRUE(approx_equal(r * r, f));
  EXPECT_EQ(r.at(pt("0.5")), Complex(3.0));
  EXPECT_FALSE(in_cone(StepFunction(1.0, {{pt("0.5"), -1.0}})));
  EXPECT_FALSE(in_cone(StepFunction::constant(Complex(0, 1))));
  EXPECT_THROW(sqrt_psd(StepFunction::constant(-1.0)), Error);
}

TEST(StepFunction, Boundedness) {
  EXPECT_TRUE(is_bounded(StepFunction(2.0, {{pt("0.5"), -5.0}})));
  EXPECT_TRUE(is_bounded(StepFunction(0.0, {}, TailExpr::parse("2 + 1/n"))));
  EXPECT_FALSE(is_bounded(StepFunction(0.0, {}, TailExpr::parse("n"))));
  EXPECT_DOUBLE_EQ(stepfn::entrywise_bound(StepFunction(2.0, {{pt("0.5"), -5.0}})), 5.0);
}

TEST(CocountableSet, TagArithmetic) {
  using stepfn::CocountableSet;
  using stepfn::SetTag;
  const CocountableSet p(SetTag::Countable, {pt("0.5")});
  const CocountableSet q(SetTag::CoCountable, {pt("0.5"), pt("0.25")});
  EXPECT_EQ(p.unite(q), CocountableSet(SetTag::CoCountable, {pt("0.25")}));
  EXPECT_EQ(p.intersect(q), CocountableSet::empty());
  EXPECT_EQ(q.complement().complement(), q);
  EXPECT_TRUE(q.contains(pt("0.75")));
  EXPECT_FALSE(q.contains(pt("0.25")));
}

TEST(CocountableSet, SupportOfFunction) {
  using stepfn::SetTag;
  EXPECT_EQ(stepfn::support(StepFunction(0.0, {{pt("0.5"), 3.0}})).tag(), SetTag::Countable);
  EXPECT_EQ(stepfn::support(StepFunction(2.0, {{pt("0.5"), 0.0}})).tag(), SetTag::CoCountable);
}

TEST(FrSup, PointIndicators) {
  DominatedSeries<StepFunction> s;
  for (std::uint64_t n = 1; n <= 6; ++n) {
    const double w = std::ldexp(1.0, -static_cast<int>(n));
    s.terms.push_back(StepFunction::delta(Point::reserved(n), w));
    s.eps.push_back(w);
  }
  const StepFunction sup = fr_sup(s);
  EXPECT_EQ(sup.default_value(), Complex(0.0));
  for (std::uint64_t n = 1; n <= 6; ++n)
    EXPECT_DOUBLE_EQ(sup.at(Point::reserved(n)).real(), std::ldexp(1.0, -static_cast<int>(n)));
}

TEST(FrSup, GeometricUnit) {
  DominatedSeries<StepFunction> s;
  s.terms.push_back(0.5 * StepFunction::constant(1.0));
  s.eps.push_back(0.5);
  s.tail = GeometricTail<StepFunction>{0.5, 0.5 * StepFunction::constant(1.0), 0.5};
  EXPECT_TRUE(approx_equal(fr_sup(s), StepFunction::constant(1.0)));
}

TEST(FrSup, ZeroSeriesAndDominationErrors) {
  DominatedSeries<StepFunction> s;
  s.terms = {StepFunction::constant(0.0), StepFunction::constant(0.0)};
  s.eps = {0.0, 0.0};
  EXPECT_TRUE(approx_equal(fr_sup(s), StepFunction::constant(0.0)));
  s.terms[1] = StepFunction::constant(1.0);
  EXPECT_THROW(fr_sup(s), Error);
}

TEST(NotBaer, WitnessPasses) {
  const AxiomReport r = stepfn::not_baer_witness();
  EXPECT_TRUE(r.all_passed());
  EXPECT_TRUE(r.checks().count("structure.projection_support_tags"));
  EXPECT_TRUE(r.checks().count("argument.no_generating_projection"));
}

}  // namespace

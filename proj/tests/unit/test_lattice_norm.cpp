#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "rickart/oracle.hpp"
#include "rickart/rickart.hpp"

namespace {

using namespace rickart;
using matrix::Complex;
using matrix::MatrixElement;
using stepfn::Point;
using stepfn::StepFunction;
using stepfn::TailExpr;

const MatrixElement kSwap = MatrixElement::from_rows({{0, 1}, {1, 0}});
const MatrixElement kNilpotent = MatrixElement::from_rows({{0, 1}, {0, 0}});
const Tolerance kTol;
const Tolerance kTol10{10 * kTol.eps_eq, kTol.eps_psd};

Point pt(const char* label) { return Point::parse(label).value(); }

// ---- positive part and lattice ----------------------------------------------

TEST(PositivePart, MatrixExamples) {
  EXPECT_TRUE(approx_equal(positive_part(MatrixElement::diagonal({1, -2})), MatrixElement::diagonal({1, 0}), kTol10));
  EXPECT_TRUE(approx_equal(positive_part(kSwap), MatrixElement::from_rows({{0.5, 0.5}, {0.5, 0.5}}), kTol10));
  const MatrixElement p = MatrixElement::from_rows({{2, 1}, {1, 2}});
  EXPECT_TRUE(approx_equal(positive_part(p), p, kTol10));
}

TEST(PositivePart, ConstructionIdentities) {
  std::mt19937_64 rng(43);
  for (int s = 0; s < 50; ++s) {
    const auto x = random::hermitian(1 + s % 6, rng);
    const auto c = positive_part_construction(x);
    const MatrixElement one = one_like(x);
    EXPECT_TRUE(approx_equal(c.x * c.e, c.y * c.e, kTol10));
    EXPECT_TRUE(approx_equal(c.x * c.f, -(c.y * c.f), kTol10));
    EXPECT_TRUE(approx_equal((one - c.e) * (one - c.f), zero_like(x), kTol10));
    EXPECT_TRUE(approx_equal(positive_part(x), oracle::positive_part(x), kTol10));
  }
}

TEST(PositivePart, StepFunction) {
  const StepFunction f(-2.0, {{pt("0.5"), 3.0}}, TailExpr::parse("1 - 4/n"));
  const StepFunction p = positive_part(f);
  EXPECT_EQ(p.default_value(), Complex(0.0));
  EXPECT_NEAR(p.at(pt("0.5")).real(), 3.0, 1e-12);
  EXPECT_NEAR(p.at(Point::reserved(2)).real(), 0.0, 1e-12);
  EXPECT_NEAR(p.at(Point::reserved(8)).real(), 0.5, 1e-12);
  EXPECT_TRUE(approx_equal(p, oracle::positive_part(f), kTol10));
}

TEST(PositivePart, RejectsNonHermitian) { EXPECT_THROW(positive_part(kNilpotent), Error); }

TEST(Lattice, JoinMeetAndAbs) {
  const MatrixElement x = MatrixElement::diagonal({1, -2});
  const MatrixElement z = MatrixElement::diagonal({0, 1});
  EXPECT_TRUE(approx_equal(join(x, z), MatrixElement::diagonal({1, 1}), kTol10));
  EXPECT_TRUE(approx_equal(meet(x, z), MatrixElement::diagonal({0, -2}), kTol10));
  EXPECT_TRUE(approx_equal(abs_value(x), MatrixElement::diagonal({1, 2}), kTol10));
  const StepFunction f(1.0, {{pt("0.25"), -3.0}});
  const StepFunction g(0.0, {{pt("0.25"), 2.0}});
  const StepFunction j = join(f, g);
  EXPECT_NEAR(j.default_value().real(), 1.0, 1e-12);
  EXPECT_NEAR(j.at(pt("0.25")).real(), 2.0, 1e-12);
  EXPECT_TRUE(approx_equal(j, oracle::pointwise_max({f, g}), kTol10));
}

TEST(SupIncreasing, HarmonicToUnit) {
  IncreasingSequence<MatrixElement> seq;
  seq.prefix = {MatrixElement::zero(2), 0.5 * MatrixElement::identity(2)};
  seq.limit = LimitDescriptor<MatrixElement>{MatrixElement::identity(2), Schedule::Harmonic, 0.5};
  const auto r = sup_increasing(seq, MatrixElement::identity(2));
  EXPECT_TRUE(approx_equal(r.sup, MatrixElement::identity(2), Tolerance{100 * kTol.eps_eq, kTol.eps_psd}));
  EXPECT_TRUE(r.inverse_ok);
  EXPECT_TRUE(r.w_inv_le_one);
  EXPECT_TRUE(r.compressed_ok);
}

TEST(SupIncreasing, ConstantSequence) {
  const MatrixElement c = MatrixElement::diagonal({0.5, 2});
  IncreasingSequence<MatrixElement> seq;
  seq.prefix = {c, c, c};
  const auto r = sup_increasing(seq, MatrixElement::diagonal({3, 3}));
  EXPECT_TRUE(approx_equal(r.sup, c, Tolerance{100 * kTol.eps_eq, kTol.eps_psd}));
}

TEST(SupIncreasing, FunctionIndicators) {
  IncreasingSequence<StepFunction> seq;
  StepFunction acc = StepFunction::constant(0.0);
  for (std::uint64_t n = 1; n <= 5; ++n) {
    acc = acc + StepFunction::delta(Point::reserved(n));
    seq.prefix.push_back(acc);
  }
  const auto r = sup_increasing(seq, StepFunction::constant(1.0));
  EXPECT_TRUE(approx_equal(r.sup, acc, Tolerance{100 * kTol.eps_eq, kTol.eps_psd}));
}

TEST(SupIncreasing, RejectsDecreasing) {
  IncreasingSequence<MatrixElement> seq;
  seq.prefix = {MatrixElement::identity(2), MatrixElement::zero(2)};
  EXPECT_THROW(sup_increasing(seq, MatrixElement::identity(2)), Error);
}

// ---- spectral family and Riemann sums ----------------------------------------

TEST(SpectralFamily, DiagonalExample) {
  const auto fam = spectral_family(MatrixElement::diagonal({1, 2}));
  EXPECT_TRUE(approx_equal(fam.at(1.0), MatrixElement::zero(2)));
  EXPECT_TRUE(approx_equal(fam.at(1.5), MatrixElement::diagonal({1, 0})));
  EXPECT_TRUE(approx_equal(fam.at(2.0), MatrixElement::diagonal({1, 0})));
  EXPECT_TRUE(approx_equal(fam.at(2.5), MatrixElement::identity(2)));
  EXPECT_TRUE(verify_spectral_family(fam).all_passed());
}

TEST(SpectralFamily, ZeroElement) {
  const auto fam = spectral_family(MatrixElement::zero(3));
  EXPECT_TRUE(approx_equal(fam.at(0.0), MatrixElement::zero(3)));
  EXPECT_TRUE(approx_equal(fam.at(-1.0), MatrixElement::zero(3)));
  EXPECT_TRUE(approx_equal(fam.at(0.1), MatrixElement::identity(3)));
}

TEST(SpectralFamily, RepeatedEigenvalues) {
  std::mt19937_64 rng(47);
  const auto u = random::unitary(4, rng);
  const MatrixElement x = matrix::hermitize(
      MatrixElement(matrix::Dense(u * MatrixElement::diagonal({1, 1, 3, 3}).dense() * u.adjoint())));
  const auto fam = spectral_family(x);
  EXPECT_EQ(fam.breakpoints().size(), 2u);
  EXPECT_TRUE(verify_spectral_family(fam).all_passed());
}

TEST(SpectralFamily, AnnihilatorRouteAgrees) {
  std::mt19937_64 rng(53);
  const auto x = random::hermitian(5, rng);
  const auto fam = spectral_family(x);
  for (double l : fam.probe_lambdas())
    EXPECT_TRUE(approx_equal(fam.evaluate(l).projection, sublevel_projection(x, fam.evaluate(l).effective_lambda),
                             Tolerance{1e-7, 1e-7}));
}

TEST(SpectralFamily, FunctionExample) {
  const StepFunction f(3.0, {{pt("0.5"), -1.0}});
  const auto fam = spectral_family(f);
  const StepFunction e0 = fam.at(0.0);
  EXPECT_EQ(e0.default_value(), Complex(0.0));
  EXPECT_EQ(e0.at(pt("0.5")), Complex(1.0));
  EXPECT_TRUE(approx_equal(fam.at(4.0), StepFunction::constant(1.0)));
  EXPECT_TRUE(verify_spectral_family(fam).all_passed());
}

TEST(SpectralFamily, UnboundedFunctionOnProbes) {
  const StepFunction f(0.0, {{pt("0.5"), -1.0}}, TailExpr::parse("n"));
  ASSERT_FALSE(is_bounded(f));
  EXPECT_TRUE(verify_spectral_family(spectral_family(f)).all_passed());
}

TEST(Riemann, DiagonalExample) {
  const Partition p({0.0, 1.5, 3.0}, {0.75, 2.25});
  const auto rec = riemann_reconstruct(MatrixElement::diagonal({1, 2}), p);
  EXPECT_TRUE(approx_equal(rec.approx, MatrixElement::diagonal({0.75, 2.25})));
  EXPECT_NEAR(rec.error, 0.25, 1e-12);
  EXPECT_DOUBLE_EQ(rec.mesh, 1.5);
}

TEST(Riemann, ScalarIsExact) {
  const Partition p({-1.0, 1.0, 3.0}, {0.0, 2.0});
  EXPECT_NEAR(riemann_reconstruct(2.0 * MatrixElement::identity(3), p).error, 0.0, 1e-12);
}

TEST(Riemann, RefinementChain) {
  const Partition p0 = Partition::covering(1.0, 1.0);
  const Partition p1 = p0.refine(2);
  const Partition p2 = p1.refine(2);
  const double e0 = riemann_reconstruct(kSwap, p0).error;
  const double e1 = riemann_reconstruct(kSwap, p1).error;
  const double e2 = riemann_reconstruct(kSwap, p2).error;
  EXPECT_LE(e0, 1.0 + kTol.eps_eq);
  EXPECT_LE(e1, 0.5 + kTol.eps_eq);
  EXPECT_LE(e2, 0.25 + kTol.eps_eq);
  EXPECT_LE(e1, e0);
  EXPECT_LE(e2, e1);
}

TEST(Riemann, StepFunction) {
  const StepFunction f(2.0, {{pt("0.5"), -1.0}}, TailExpr::parse("1/n"));
  const auto rec = riemann_reconstruct(f, Partition::covering(2.0, 0.1));
  EXPECT_LE(rec.error, 0.1 + kTol.eps_eq);
}

TEST(Riemann, Preconditions) {
  EXPECT_THROW(riemann_reconstruct(MatrixElement::diagonal({1, 2}), Partition({1.5, 3.0}, {2.0})), Error);
  EXPECT_THROW(riemann_reconstruct(MatrixElement::diagonal({1, 2}), Partition({0.0, 3.0, 2.0}, {1.0, 2.5})), Error);
  EXPECT_THROW(riemann_reconstruct(StepFunction(0.0, {}, TailExpr::parse("n")), Partition::covering(1, 1)), Error);
  EXPECT_THROW(riemann_reconstruct(kNilpotent, Partition::covering(1, 1)), Error);
}

// ---- norm ---------------------------------------------------------------------

TEST(OrderNorm, Examples) {
  EXPECT_NEAR(order_norm(MatrixElement::diagonal({1, -3})), 3.0, 10 * kTol.eps_eq);
  EXPECT_NEAR(order_norm(MatrixElement::identity(3)), 1.0, 10 * kTol.eps_eq);
  EXPECT_NEAR(order_norm(2.0 * kSwap), 2.0, 10 * kTol.eps_eq);
  EXPECT_DOUBLE_EQ(order_norm(MatrixElement::zero(2)), 0.0);
  EXPECT_NEAR(order_norm(StepFunction(2.0, {{pt("0.5"), -5.0}})), 5.0, 10 * kTol.eps_eq);
}

TEST(OrderNorm, MatchesSpectralRadius) {
  std::mt19937_64 rng(59);
  for (int s = 0; s < 100; ++s) {
    const auto x = random::hermitian(1 + s % 8, rng);
    EXPECT_NEAR(order_norm(x), matrix::spectral_radius(x), 10 * kTol.eps_eq);
  }
}

TEST(ExtractBounded, Examples) {
  const auto c = extract_bounded(MatrixElement::diagonal({1, -3}));
  ASSERT_TRUE(c);
  EXPECT_NEAR(c->lambda, 3.0, 10 * kTol.eps_eq);
  EXPECT_TRUE(c->verify());
  const auto f = extract_bounded(StepFunction(2.0, {{pt("0.5"), -4.0}}));
  ASSERT_TRUE(f);
  EXPECT_NEAR(f->lambda, 4.0, 10 * kTol.eps_eq);
  EXPECT_FALSE(extract_bounded(StepFunction(0.0, {}, TailExpr::parse("n"))));
}

TEST(CStar, Examples) {
  const auto c = cstar_identity_check(kNilpotent);
  EXPECT_NEAR(c.lhs, 1.0, 10 * kTol.eps_eq);
  EXPECT_NEAR(c.rhs, 1.0, 10 * kTol.eps_eq);
  EXPECT_TRUE(c.pass);
  const auto a = cstar_identity_check(Complex(0, 2) * MatrixElement::identity(2));
  EXPECT_NEAR(a.lhs, 4.0, 100 * kTol.eps_eq);
  EXPECT_NEAR(a.rhs, 4.0, 100 * kTol.eps_eq);
}

TEST(SeriesSup, GeometricUnit) {
  DominatedSeries<MatrixElement> s;
  s.terms.push_back(0.5 * MatrixElement::identity(2));
  s.eps.push_back(0.5);
  s.tail = GeometricTail<MatrixElement>{0.5, 0.5 * MatrixElement::identity(2), 0.5};
  const auto r = series_sup(s);
  EXPECT_TRUE(approx_equal(r.sup, MatrixElement::identity(2)));
  for (const auto& b : r.tail_bounds) {
    EXPECT_NEAR(b.lhs, std::ldexp(1.0, -static_cast<int>(b.k)), 10 * kTol.eps_eq);
    EXPECT_NEAR(b.rhs, std::ldexp(2.0, -static_cast<int>(b.k)), 10 * kTol.eps_eq);
  }
  EXPECT_TRUE(r.bounds_hold(kTol.eps_eq));
}

TEST(SeriesSup, DiagonalProjection) {
  DominatedSeries<MatrixElement> s;
  const MatrixElement e = MatrixElement::diagonal({1, 0});
  s.terms.push_back(0.5 * e);
  s.eps.push_back(0.5);
  s.tail = GeometricTail<MatrixElement>{0.5, 0.5 * e, 0.5};
  EXPECT_TRUE(approx_equal(series_sup(s).sup, e));
}

TEST(SeriesSup, ZeroSeries) {
  DominatedSeries<MatrixElement> s;
  s.terms = {MatrixElement::zero(2), MatrixElement::zero(2)};
  s.eps = {0.0, 0.0};
  const auto r = series_sup(s);
  EXPECT_TRUE(approx_equal(r.sup, MatrixElement::zero(2)));
  for (const auto& b : r.tail_bounds) EXPECT_DOUBLE_EQ(b.rhs, 0.0);
}

TEST(States, DiagonalExample) {
  const MatrixElement x = MatrixElement::diagonal({1, -3});
  matrix::Vector e2 = matrix::Vector::Zero(2);
  e2(1) = 1.0;
  EXPECT_NEAR(state_norm(x, std::vector<matrix::VectorState>{{e2}}), 3.0, 1e-12);
  std::mt19937_64 rng(61);
  EXPECT_NEAR(state_norm(MatrixElement::identity(3), matrix::sample_states(3, 10, rng)), 1.0, 1e-12);
}

TEST(States, NeverExceedOrderNorm) {
  std::mt19937_64 rng(67);
  for (int s = 0; s < 50; ++s) {
    const auto x = random::matrix(1 + s % 6, rng);
    EXPECT_LE(state_norm(x, matrix::sample_states_for(x, rng)), order_norm(x) + kTol.eps_eq);
    const auto f = random::fn::step_function(random::fn::Shape::General, rng);
    EXPECT_LE(state_norm(f, stepfn::sample_states_for(f, rng)), order_norm(f) + kTol.eps_eq);
  }
}

TEST(States, EmptyListThrows) {
  EXPECT_THROW(state_norm(kSwap, std::vector<matrix::VectorState>{}), Error);
}

}  // namespace

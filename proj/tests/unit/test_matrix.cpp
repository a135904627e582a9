#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "rickart/rickart.hpp"

namespace {

using namespace rickart;
using matrix::Complex;
using matrix::Dense;
using matrix::MatrixElement;

const MatrixElement kSwap = MatrixElement::from_rows({{0, 1}, {1, 0}});
const MatrixElement kNilpotent = MatrixElement::from_rows({{0, 1}, {0, 0}});

TEST(MatrixElement, StarIsConjugateTranspose) {
  const MatrixElement x = MatrixElement::from_rows({{1, Complex(2, 3)}, {Complex(0, -1), 4}});
  const MatrixElement expected = MatrixElement::from_rows({{1, Complex(0, 1)}, {Complex(2, -3), 4}});
  EXPECT_TRUE(approx_equal(star(x), expected));
}

TEST(MatrixElement, DimensionMismatchThrows) {
  EXPECT_THROW(MatrixElement::identity(2) + MatrixElement::identity(3), Error);
}

TEST(MatrixElement, DiagonalAndUnits) {
  const MatrixElement d = MatrixElement::diagonal({1, 2, 3});
  EXPECT_EQ(d.dim(), 3u);
  EXPECT_DOUBLE_EQ(d.dense()(2, 2).real(), 3.0);
  EXPECT_DOUBLE_EQ(matrix::matrix_unit(3, 0, 2).dense()(0, 2).real(), 1.0);
}

TEST(HermitianParts, Reassemble) {
  const MatrixElement x = MatrixElement::from_rows({{1, Complex(2, 3)}, {Complex(0, -1), 4}});
  const auto [a, b] = hermitian_parts(x);
  EXPECT_TRUE(is_hermitian(a));
  EXPECT_TRUE(is_hermitian(b));
  EXPECT_TRUE(approx_equal(a + Complex(0, 1) * b, x));
}

TEST(HermitianParts, NilpotentExample) {
  const auto [a, b] = hermitian_parts(kNilpotent);
  EXPECT_TRUE(approx_equal(a, 0.5 * kSwap));
  EXPECT_TRUE(approx_equal(b, MatrixElement::from_rows({{0, Complex(0, -0.5)}, {Complex(0, 0.5), 0}})));
}

TEST(Eig, SwapMatrix) {
  const auto eig = matrix::eig_hermitian(kSwap);
  EXPECT_NEAR(eig.values(0), -1.0, 1e-12);
  EXPECT_NEAR(eig.values(1), 1.0, 1e-12);
  EXPECT_TRUE(approx_equal(eig.reconstruct(), kSwap, Tolerance{1e-8, 1e-8}));
}

TEST(Eig, CharacteristicPolynomialOracle) {
  // Eigenvalues of [[2,1],[1,2]] are the roots of l^2 - 4l + 3.
  const auto eig = matrix::eig_hermitian(MatrixElement::from_rows({{2, 1}, {1, 2}}));
  EXPECT_NEAR(eig.values(0), 1.0, 1e-12);
  EXPECT_NEAR(eig.values(1), 3.0, 1e-12);
}

TEST(Eig, UnitaryEigenvectors) {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 20; ++s) {
    const auto x = random::hermitian(6, rng);
    const auto eig = matrix::eig_hermitian(x);
    const Dense u = eig.vectors;
    EXPECT_LE((u.adjoint() * u - Dense::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_TRUE(approx_equal(eig.reconstruct(), x, Tolerance{1e-8, 1e-8}));
    for (Eigen::Index k = 1; k < eig.values.size(); ++k) EXPECT_LE(eig.values(k - 1), eig.values(k));
  }
}

TEST(Eig, RejectsNonHermitian) { EXPECT_THROW(matrix::eig_hermitian(kNilpotent), Error); }

TEST(Cone, Membership) {
  EXPECT_TRUE(in_cone(MatrixElement::diagonal({0, 1})));
  EXPECT_FALSE(in_cone(MatrixElement::diagonal({1, -1})));
  EXPECT_FALSE(in_cone(kNilpotent));
  EXPECT_TRUE(leq(MatrixElement::diagonal({1, 1}), MatrixElement::diagonal({2, 1})));
}

TEST(Sqrt, Diagonal) {
  EXPECT_TRUE(approx_equal(sqrt_psd(MatrixElement::diagonal({4, 9})), MatrixElement::diagonal({2, 3})));
}

TEST(Sqrt, ClosedForm) {
  // [[2,1],[1,2]] = U diag(1,3) U*, so its root is U diag(1, sqrt 3) U*.
  const double r3 = std::sqrt(3.0);
  const MatrixElement expected = MatrixElement::from_rows({{(r3 + 1) / 2, (r3 - 1) / 2}, {(r3 - 1) / 2, (r3 + 1) / 2}});
  EXPECT_TRUE(approx_equal(sqrt_psd(MatrixElement::from_rows({{2, 1}, {1, 2}})), expected));
}

TEST(Sqrt, RejectsIndefinite) { EXPECT_THROW(sqrt_psd(MatrixElement::diagonal({1, -1})), Error); }

TEST(Sqrt, SquaresBackAndLiesInBicommutant) {
  std::mt19937_64 rng(3);
  const Tolerance tol;
  const Tolerance tol10{10 * tol.eps_eq, tol.eps_psd};
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = 1 + s % 8;
    const auto x = random::psd(n, rng);
    const auto y = sqrt_psd(x);
    EXPECT_TRUE(approx_equal(y * y, x, tol10));
    EXPECT_TRUE(in_cone(y));
    EXPECT_TRUE(matrix::bicommutant(x).contains(y, tol10));
  }
}

TEST(Sqrt, IterativeRouteAgrees) {
  std::mt19937_64 rng(5);
  const Tolerance tol;
  for (int s = 0; s < 40; ++s) {
    const auto x = random::psd_with_spectrum(1 + s % 8, 0.1, 4.0, rng);
    EXPECT_LE(matrix::distance(sqrt_psd(x), matrix::sqrt_psd_iterative(x)), 100 * tol.eps_eq);
  }
}

TEST(RightProjection, Nilpotent) {
  const MatrixElement e = right_projection(kNilpotent);
  EXPECT_TRUE(approx_equal(e, MatrixElement::diagonal({0, 1})));
}

TEST(RightProjection, Laws) {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 50; ++s) {
    const auto x = random::rank_deficient(1 + s % 6, rng);
    const MatrixElement e = right_projection(x);
    EXPECT_TRUE(matrix::is_projection(e));
    EXPECT_TRUE(approx_equal(x * e, x, Tolerance{1e-8, 1e-8}));
  }
  EXPECT_TRUE(approx_equal(right_projection(MatrixElement::zero(3)), MatrixElement::zero(3)));
  EXPECT_TRUE(approx_equal(right_projection(MatrixElement::identity(3)), MatrixElement::identity(3)));
}

TEST(Commutant, Dimensions) {
  EXPECT_EQ(matrix::commutant({MatrixElement::diagonal({1, 2})}).dim(), 2u);
  EXPECT_EQ(matrix::commutant({MatrixElement::identity(3)}).dim(), 9u);
  EXPECT_EQ(matrix::commutant({kNilpotent}).dim(), 2u);
  const auto c = matrix::commutant({kNilpotent});
  EXPECT_TRUE(c.contains(MatrixElement::identity(2)));
  EXPECT_TRUE(c.contains(kNilpotent));
  EXPECT_FALSE(c.contains(MatrixElement::diagonal({1, 0})));
}

TEST(Commutant, MembersCommute) {
  std::mt19937_64 rng(23);
  const auto x = random::hermitian(4, rng);
  for (const auto& m : matrix::commutant({x}).members()) EXPECT_TRUE(matrix::commutes(m, x, Tolerance{1e-8, 1e-8}));
}

TEST(Masa, StandardBasisPasses) {
  EXPECT_TRUE(matrix::masa_check(Dense(Dense::Identity(2, 2)), 1, 20).all_passed());
  EXPECT_TRUE(matrix::masa_check(Dense(Dense::Identity(3, 3)), 1, 20).all_passed());
}

TEST(Masa, ScalarsAreNotMaximal) {
  const auto report = matrix::masa_check(std::vector<MatrixElement>{MatrixElement::identity(2)}, 1, 5);
  EXPECT_FALSE(report.all_passed());
}

TEST(Masa, RandomBasisPasses) {
  std::mt19937_64 rng(29);
  EXPECT_TRUE(matrix::masa_check(random::unitary(4, rng), 2, 30).all_passed());
}

TEST(Prop2, Examples) {
  EXPECT_TRUE(matrix::prop2_check(kNilpotent));
  std::mt19937_64 rng(31);
  EXPECT_TRUE(matrix::prop2_check(MatrixElement(random::unitary(3, rng))));
  EXPECT_TRUE(matrix::prop2_check(2.0 * MatrixElement::identity(2)));
}

TEST(Prop2, NoCounterexampleOnContractions) {
  std::mt19937_64 rng(37);
  for (int s = 0; s < 200; ++s) {
    auto x = random::matrix(1 + s % 5, rng);
    x = (1.0 / matrix::operator_norm(x)) * x;
    EXPECT_TRUE(matrix::prop2_check(x));
  }
}

}  // namespace

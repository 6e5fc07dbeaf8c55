#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "superint/laurent.hpp"
#include "superint/op2d.hpp"
#include "superint/ratfn.hpp"
#include "superint/trigrat.hpp"

using namespace superint;

namespace {

Poly X() { return Poly::x(); }

// Random small operator with polynomial-in-x coefficients and r powers -2..2.
Op2D random_op(std::mt19937& rng, int max_order) {
  std::uniform_int_distribution<int> coef(-3, 3), pw(-2, 2), ord(0, max_order);
  Op2D out;
  for (int t = 0; t < 4; ++t) {
    const int i = ord(rng);
    const int j = std::uniform_int_distribution<int>(0, max_order - i)(rng);
    const TrigRat c(RatFn(Poly{coef(rng), coef(rng)}), RatFn(Poly{coef(rng)}));
    out += Op2D::term(LaurentR(c, pw(rng)), i, j);
  }
  return out;
}

}  // namespace

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(RatFn, NormalizeCancelsCommonFactor) {
  const RatFn f = RatFn::normalize(X() * X() - Poly{1}, X() - Poly{1});
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.num(), (Poly{1, 1}));
}

TEST(RatFn, NormalizeZeroNumerator) {
  const RatFn f = RatFn::normalize(Poly{}, Poly{2, 0, 0, 1});
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.den(), Poly{1});
}

TEST(RatFn, NormalizeConstantDenominator) {
  const RatFn f = RatFn::normalize(Poly{2, 2}, Poly{4});
  EXPECT_EQ(f.den(), Poly{1});
  EXPECT_EQ(f.num(), (Poly{Rational(1, 2), Rational(1, 2)}));
}

TEST(RatFn, FieldAxiomsOnSamples) {
  const RatFn a = RatFn::normalize(Poly{1, 2, 1}, Poly{-3, 1});
  const RatFn b = RatFn::normalize(Poly{5, -1}, Poly{1, 0, 1});
  EXPECT_EQ(a * b.inverse() * b, a);
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
  for (const Rational& x : {Rational(1, 7), Rational(-2, 9), Rational(5)}) {
    EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
  }
}

TEST(TrigRat, SquareOfS) { EXPECT_EQ(TrigRat::s() * TrigRat::s(), TrigRat(RatFn(Poly{1, 0, -1}))); }

TEST(TrigRat, ConjugateProduct) {
  const TrigRat x = TrigRat::x();
  const TrigRat s = TrigRat::s();
  const TrigRat prod = (x + s) * (x - s);
  EXPECT_EQ(prod, TrigRat(RatFn(Poly{-1, 0, 2})));
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ang(0.05, 1.5);
  for (int k = 0; k < 10; ++k) {
    const double phi = ang(rng);
    const double xv = -std::cos(2 * phi), sv = std::sin(2 * phi);
    EXPECT_NEAR(prod.eval_phi(phi), (xv + sv) * (xv - sv), 1e-12);
  }
}

TEST(TrigRat, IdentityIsNeutral) {
  const TrigRat f(RatFn::normalize(Poly{1, 3}, Poly{-3, 1}), RatFn(Poly{2, 0, 1}));
  EXPECT_EQ(TrigRat(1) * f, f);
}

TEST(TrigRat, DerivativesOfGenerators) {
  EXPECT_EQ(TrigRat::x().dphi(), TrigRat::s() * 2);
  EXPECT_EQ(TrigRat::s().dphi(), TrigRat::x() * -2);
  EXPECT_TRUE(TrigRat(Rational(7)).dphi().is_zero());
  const double phi = 0.37, h = 1e-6;
  auto xf = [](double t) { return -std::cos(2 * t); };
  EXPECT_NEAR(TrigRat::x().dphi().eval_phi(phi), (xf(phi + h) - xf(phi - h)) / (2 * h), 1e-8);
}

TEST(TrigRat, DerivativeMatchesFiniteDifference) {
  const TrigRat f = TrigRat(RatFn::normalize(Poly{1}, Poly{3, -1})) * TrigRat::s() +
                    TrigRat(RatFn(Poly{0, 0, 1}));
  const double h = 1e-6;
  for (double phi : {0.2, 0.7, 1.3}) {
    EXPECT_NEAR(f.dphi().eval_phi(phi), (f.eval_phi(phi + h) - f.eval_phi(phi - h)) / (2 * h),
                1e-6);
  }
}

TEST(LaurentR, ScaleShift) {
  EXPECT_EQ(laurent_scale_shift(LaurentR(Rational(1), 2), -4), LaurentR(Rational(1), -2));
  EXPECT_TRUE(laurent_scale_shift(LaurentR(), 3).is_zero());
  const LaurentR f = LaurentR(Rational(1), -2) + LaurentR(Rational(1), 2);
  EXPECT_EQ(laurent_scale_shift(f, 2), LaurentR(Rational(1), 0) + LaurentR(Rational(1), 4));
}

TEST(Op2D, LeibnizForDr) {
  const Op2D r = Op2D(LaurentR(Rational(1), 1));
  EXPECT_EQ(op_compose(Op2D::dr(), r).dump(),
            (Op2D::term(LaurentR(Rational(1), 1), 1, 0) + Op2D::identity()).dump());
  EXPECT_TRUE(op_equal(op_commutator(Op2D::dr(), r), Op2D::identity()));
}

TEST(Op2D, DphiPastX) {
  const Op2D x = Op2D(LaurentR(TrigRat::x()));
  const Op2D expected = x * Op2D::dphi() + Op2D(LaurentR(TrigRat::s() * 2));
  EXPECT_TRUE(op_equal(Op2D::dphi() * x, expected));
  // Applied to x^3 at a few angles.
  const Op2D lhs = Op2D::dphi() * x * Op2D(LaurentR(TrigRat(RatFn(Poly{0, 0, 0, 1}))));
  for (double phi : {0.3, 0.9}) {
    const double xv = -std::cos(2 * phi), sv = std::sin(2 * phi);
    // d/dphi (x^4) = 4 x^3 * 2 s
    EXPECT_NEAR(lhs.coeff(0, 0).eval(1.0, phi), 8 * xv * xv * xv * sv, 1e-12);
  }
}

TEST(Op2D, IdentityAndEquality) {
  std::mt19937 rng(3);
  const Op2D a = random_op(rng, 2);
  EXPECT_TRUE(op_equal(op_compose(a, Op2D::identity()), a));
  EXPECT_TRUE(op_equal(a, a));
  EXPECT_TRUE(op_equal(Op2D::dr() * Op2D::dphi(), Op2D::dphi() * Op2D::dr()));
  EXPECT_FALSE(op_equal(a, a + Op2D::identity()));
}

// Lie-algebra properties on random operators.
class CommutatorProperty : public ::testing::TestWithParam<unsigned> {};

TEST_P(CommutatorProperty, AntisymmetryAndJacobi) {
  std::mt19937 rng(GetParam());
  const Op2D a = random_op(rng, 2), b = random_op(rng, 2), c = random_op(rng, 1);
  EXPECT_TRUE((op_commutator(a, b) + op_commutator(b, a)).is_zero());
  EXPECT_TRUE(op_commutator(a, a).is_zero());
  const Op2D jac = op_commutator(a, op_commutator(b, c)) + op_commutator(b, op_commutator(c, a)) +
                   op_commutator(c, op_commutator(a, b));
  EXPECT_TRUE(jac.is_zero());
  EXPECT_TRUE(op_equal((a * b) * c, a * (b * c)));
}

TEST_P(CommutatorProperty, ScalarsAreCentral) {
  std::mt19937 rng(GetParam() + 100);
  const Op2D a = random_op(rng, 3);
  EXPECT_TRUE(op_commutator(a, Op2D(Rational(5, 3))).is_zero());
  EXPECT_TRUE(op_equal(a * Rational(2), a + a));
}

INSTANTIATE_TEST_SUITE_P(Seeds, CommutatorProperty, ::testing::Range(1u, 9u));

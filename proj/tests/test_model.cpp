#include <gtest/gtest.h>

#include <cmath>

#include "superint/model.hpp"
#include "superint/suites.hpp"

using namespace superint;

namespace {

SystemParams fixed() { return SystemParams(1, 2, 1); }

std::vector<SystemParams> instances() {
  std::vector<SystemParams> out{fixed(), SystemParams(Rational(3, 2), Rational(7, 3), Rational(2))};
  for (const auto& p : random_instances(2024, 5, OmegaConvention::kSpectral)) out.push_back(p);
  return out;
}

}  // namespace

TEST(Params, DeformationRoot) {
  EXPECT_EQ(fixed().b(), 3);
  EXPECT_EQ(SystemParams(Rational(3, 2), Rational(5, 2), 1).b(), 4);
  EXPECT_THROW(SystemParams(1, 1, 1), std::invalid_argument);
  EXPECT_THROW(SystemParams(1, 2, 0), std::invalid_argument);
}

TEST(Model, AngularPotentialMatchesClosedForm) {
  const SystemParams p = fixed();
  const TrigRat v = angular_potential(p);
  for (double phi : {0.2, 0.785398163397448, 1.1}) {
    const double c = std::cos(phi), s = std::sin(phi), c2 = std::cos(2 * phi);
    const double expected = 0.75 / (c * c) + 3.75 / (s * s) + 8 * (1 + 3 * c2) / ((3 + c2) * (3 + c2));
    EXPECT_NEAR(v.eval_phi(phi), expected, 1e-12);
  }
  // Deformation term alone at phi = pi/4.
  const double phi = 0.785398163397448;
  EXPECT_NEAR(v.eval_phi(phi) - 0.75 / 0.5 - 3.75 / 0.5, 8.0 / 9.0, 1e-12);
}

TEST(Model, IntegralConstants) {
  const CConstants c = integral_constants(fixed());
  EXPECT_EQ(c.c12, 42);
  EXPECT_EQ(c.c11, 0);
  EXPECT_EQ(c.c10, 0);
  EXPECT_EQ(c.c30, 0);
}

TEST(Model, NonlinearTEquation) {
  const SystemParams p = fixed();
  CConstants c = integral_constants(p);
  EXPECT_TRUE(nonlinear_T_residual(potential_T(p), c).is_zero());
  c.c12 += 1;
  EXPECT_FALSE(nonlinear_T_residual(potential_T(p), c).is_zero());
}

class Instances : public ::testing::TestWithParam<int> {};

TEST_P(Instances, HamiltonianCommutesWithIntegrals) {
  const SystemParams p = instances()[GetParam()];
  const IntegralBundle B = build_L2(p);
  EXPECT_TRUE(op_commutator(B.H, B.L1).is_zero()) << p.to_string();
  EXPECT_TRUE(op_commutator(B.H, B.L2).is_zero()) << p.to_string();
  EXPECT_EQ(B.L2.order(), 4);
}

TEST_P(Instances, DeterminingEquations) {
  const SystemParams p = instances()[GetParam()];
  const CConstants c = integral_constants(p);
  const GFunctions g = g_functions(p, c);
  const auto res = first_order_residuals(p, g, c);
  ASSERT_EQ(res.size(), 4u);
  for (const auto& r : res) EXPECT_TRUE(r.is_zero()) << r.to_string();
  EXPECT_TRUE(g.G1.dr().is_zero());
  EXPECT_TRUE(g0_cross_derivative(p, c).is_zero());
  const LaurentR g0 = integrate_G0(p, c);
  const auto [gr, gt] = g0_equation_residuals(p, c, g0);
  EXPECT_TRUE(gr.is_zero());
  EXPECT_TRUE(gt.is_zero());
}

INSTANTIATE_TEST_SUITE_P(Params, Instances, ::testing::Range(0, 7));

TEST(Model, PerturbedC12BreaksCommutation) {
  const SystemParams p = fixed();
  BuildOptions opts;
  opts.c12_override = integral_constants(p).c12 + 1;
  opts.strict = false;
  const IntegralBundle B = build_L2(p, opts);
  EXPECT_FALSE(op_commutator(B.H, B.L2).is_zero());
  opts.strict = true;
  EXPECT_THROW(build_L2(p, opts), IntegrationError);
}

TEST(Model, G0ConstantShiftsL2ByIdentity) {
  const SystemParams p = fixed();
  BuildOptions opts;
  opts.g0_constant = Rational(5);
  const Op2D diff = build_L2(p, opts).L2 - build_L2(p).L2;
  EXPECT_TRUE(op_equal(diff, Op2D(Rational(5))));
}

TEST(Model, G0HarmonicPartGolden) {
  // Literal convention, omega = 1: the r^2 part of G0 at (1, 2).
  const SystemParams p(1, 2, 1, OmegaConvention::kLiteral);
  const LaurentR g0 = integrate_G0(p, integral_constants(p));
  const RatFn expected = RatFn::normalize(Poly{-30, 62, -168, 182, -30, 8},
                                          Poly{-3, 1}.pow(2) * Poly{-1, 1} * Poly{1, 1});
  EXPECT_EQ(g0.coeff(2), TrigRat(expected));
  EXPECT_EQ(g0.min_power(), -2);
  EXPECT_EQ(g0.max_power(), 2);
}

TEST(Model, G0HarmonicPartScalesWithKappa) {
  const SystemParams lit(1, 2, 1, OmegaConvention::kLiteral);
  const SystemParams sp(1, 2, 1);
  const LaurentR a = integrate_G0(lit, integral_constants(lit));
  const LaurentR b = integrate_G0(sp, integral_constants(sp));
  EXPECT_EQ(a.coeff(2), b.coeff(2) * 4);
  EXPECT_EQ(a.coeff(-2), b.coeff(-2));
}

TEST(Model, EnergyFormula) {
  EXPECT_EQ(energy(0, 0, fixed()), 5);
  EXPECT_EQ(energy(1, 1, fixed()), 9);
  EXPECT_EQ(energy(2, 0, SystemParams(1, 2, Rational(1, 3))), Rational(3));
}

#include <gtest/gtest.h>

#include <cmath>

#include "superint/numeric.hpp"

using namespace superint;
using namespace superint::numeric;

TEST(Eig, DiagonalAndTwoByTwo) {
  Tridiagonal d{{1, 2, 3}, {0, 0}};
  const auto e = eig_tridiagonal(d, 3);
  EXPECT_NEAR(e[0], 1, 1e-11);
  EXPECT_NEAR(e[1], 2, 1e-11);
  EXPECT_NEAR(e[2], 3, 1e-11);
  Tridiagonal m{{2, 2}, {1}};
  const auto f = eig_tridiagonal(m, 2);
  EXPECT_NEAR(f[0], 1, 1e-11);
  EXPECT_NEAR(f[1], 3, 1e-11);
  EXPECT_THROW(eig_tridiagonal(m, 3), std::invalid_argument);
}

TEST(Eig, DiscreteLaplacianDispersion) {
  const int n = 100;
  const double h = 3.141592653589793 / (n + 1);
  Tridiagonal m{std::vector<double>(n, 2 / (h * h)), std::vector<double>(n - 1, -1 / (h * h))};
  const double lowest = eig_tridiagonal(m, 1)[0];
  EXPECT_NEAR(lowest, 4 * std::sin(h / 2) * std::sin(h / 2) / (h * h), 1e-9);
  EXPECT_NEAR(lowest, 1.0, h * h);
}

TEST(Angular, MatrixStructure) {
  const SystemParams p(1, 2, 1);
  const Tridiagonal m = discretize_angular(p, 64);
  const double h = 3.141592653589793 / 2 / 65;
  ASSERT_EQ(m.size(), 64);
  for (double o : m.off) EXPECT_NEAR(std::abs(o), 1 / (h * h), 1e-9);
  EXPECT_THROW(discretize_angular(p, 32), std::invalid_argument);
  EXPECT_THROW(discretize_angular(SystemParams(Rational(1, 4), 2, 1), 64), std::invalid_argument);
}

TEST(Angular, SeparationConstants) {
  const EigResult r = angular_spectrum(SystemParams(1, 2, 1), 3);
  const double exact[] = {16, 36, 64};
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(r.extrapolated[i] / exact[i], 1.0, 1e-3);
    const double e0 = std::abs(r.levels[0][i] - exact[i]);
    const double e1 = std::abs(r.levels[1][i] - exact[i]);
    const double e2 = std::abs(r.levels[2][i] - exact[i]);
    EXPECT_GT(e0, e1);
    EXPECT_GT(e1, e2);
    EXPECT_LT(std::abs(r.extrapolated[i] - exact[i]), e2 / 2);
  }
}

TEST(Radial, Quantization) {
  const EigResult c6 = radial_spectrum(6, 0.25, 1);
  EXPECT_NEAR(c6.extrapolated[0], 7, 7e-4);
  const EigResult c4 = radial_spectrum(4, 0.25, 3);
  EXPECT_TRUE(c4.warning.empty());
  for (int m = 0; m < 3; ++m) EXPECT_NEAR(c4.extrapolated[m] / (2 * m + 5), 1.0, 1e-4);
}

TEST(Radial, LinearInOmega) {
  // kappa = omega^2 / 4 with omega = 4.
  const EigResult one = radial_spectrum(4, 0.25, 2);
  const EigResult four = radial_spectrum(4, 4.0, 2);
  for (int m = 0; m < 2; ++m) EXPECT_NEAR(four.extrapolated[m] / one.extrapolated[m], 4.0, 1e-6);
}

TEST(Compare, FixedInstance) {
  const SpectrumReport r = compare_spectrum(SystemParams(1, 2, 1), 3);
  EXPECT_LT(r.seconds, 60);
  EXPECT_LE(r.max_angular_rel, 1e-3);
  EXPECT_LE(r.max_radial_rel, 1e-4);
  EXPECT_LE(r.max_combined_rel, 2e-3);
  auto at = [&r](int m, int n) {
    for (const auto& row : r.rows) {
      if (row.m == m && row.n == n) return row;
    }
    throw std::logic_error("missing row");
  };
  EXPECT_NEAR(at(0, 0).numeric, 5, 5e-3);
  EXPECT_NEAR(at(1, 1).numeric, 9, 9e-3);
  EXPECT_NEAR(at(1, 0).numeric / at(0, 1).numeric, 1.0, 2e-3);
  const std::string csv = spectrum_csv(r);
  EXPECT_EQ(csv.rfind("m,n,E_exact,E_numeric,rel_error,mesh_levels\n", 0), 0u);
}

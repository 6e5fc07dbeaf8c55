#include <gtest/gtest.h>

#include "superint/model.hpp"
#include "superint/oscillator.hpp"

using namespace superint;

namespace {

SystemParams fixed() { return SystemParams(1, 2, 1); }

Rational root(int family, int e1, int e2, const SystemParams& p) {
  for (const auto& r : u_roots(p)) {
    if (r.family == family && r.eps1 == e1 && (family != 1 || r.eps2 == e2)) return r.u;
  }
  throw std::logic_error("no such root");
}

}  // namespace

TEST(URoots, Values) {
  EXPECT_EQ(root(3, 1, 1, fixed()), 2);
  EXPECT_EQ(root(1, 1, 1, fixed()), 0);
  EXPECT_EQ(u_roots(fixed()).size(), 8u);
}

TEST(URoots, KillPhiAtZero) {
  const SystemParams p(Rational(3, 2), Rational(7, 3), Rational(2, 3));
  for (const auto& r : u_roots(p)) {
    for (const Rational& E : {Rational(1), Rational(17, 5), Rational(-4)}) {
      EXPECT_EQ(phi_eval(r.u, E, 0, p), 0);
      EXPECT_EQ(phi_eval(r.u, E, 0, p, EnergyPair::kPrinted), 0);
    }
  }
}

TEST(PhiEval, ClosesAtEnergyFormula) {
  EXPECT_EQ(phi_eval(2, 9, 3, fixed()), 0);
  EXPECT_EQ(phi_eval(2, 9, 1, fixed()), Rational("13299692649578496"));
  EXPECT_GT(phi_eval(2, 9, 1, fixed()), 0);
}

TEST(PhiEval, PrintedEnergyPairDoesNotClose) {
  EXPECT_NE(phi_eval(2, 9, 3, fixed(), EnergyPair::kPrinted), 0);
}

TEST(PhiEval, FirstFormIsMultipleOfPrintedRewrite) {
  const SystemParams p(Rational(3, 2), Rational(7, 3), Rational(2, 3));
  for (int n = 1; n <= 4; ++n) {
    const Rational first = phi_first_form(Rational(1, 5), Rational(7), n, p);
    EXPECT_EQ(first, 2048 * phi_eval(Rational(1, 5), 7, n, p, EnergyPair::kPrinted));
  }
}

TEST(PhiEval, DegreeTenInterpolation) {
  const SystemParams p(Rational(3, 2), Rational(7, 3), 1);
  const StructureFn s = structure_fn(Rational(1, 3), Rational(11, 2), p);
  const Poly e = s.expand();
  EXPECT_EQ(e.degree(), 10);
  for (int n = -5; n <= 5; ++n) EXPECT_EQ(e.eval(Rational(n)), s.eval(n));
}

TEST(Spectrum, FamilyEnergies) {
  EXPECT_EQ(spectrum_from_phi(3, 1, 1, 0, fixed()), 5);
  EXPECT_EQ(spectrum_from_phi(3, 1, 1, 2, fixed()), energy(1, 1, fixed()));
  EXPECT_EQ(spectrum_from_phi(2, 1, 1, 0, fixed()), 3);
  const Rational E = spectrum_from_phi(2, 1, 1, 0, fixed());
  EXPECT_TRUE(positivity_scan(root(2, 1, 1, fixed()), E, 0, fixed()).admissible);
}

TEST(Spectrum, Family3MatchesEnergyFormula) {
  for (int p = 0; p <= 6; ++p) {
    const Rational E = spectrum_from_phi(3, 1, 1, p, fixed());
    EXPECT_EQ(phi_eval(2, E, 0, fixed()), 0);
    EXPECT_EQ(phi_eval(2, E, p + 1, fixed()), 0);
    EXPECT_TRUE(positivity_scan(2, E, p, fixed()).admissible);
    for (int m = 0; m <= p; ++m) EXPECT_EQ(E, energy(m, p - m, fixed()));
  }
}

TEST(Positivity, Cases) {
  EXPECT_TRUE(positivity_scan(2, 5, 0, fixed()).admissible);
  const auto r = positivity_scan(2, spectrum_from_phi(3, 1, 1, 5, fixed()), 5, fixed());
  EXPECT_TRUE(r.admissible);
  EXPECT_TRUE(r.failures.empty());
  const Rational wrong = Rational(2) + Rational(1, 7);
  EXPECT_NE(phi_eval(wrong, 9, 0, fixed()), 0);
}

TEST(Appendix, ComparisonsAreRecorded) {
  const auto c = appendix_phi_crosscheck(1, 1, 1, 1, 1, fixed());
  EXPECT_EQ(c.diff, c.appendix - c.master);
  for (int family = 1; family <= 3; ++family) {
    for (int p = 0; p <= 3; ++p) {
      const auto top = appendix_phi_crosscheck(family, 1, 1, p, p + 1, fixed());
      EXPECT_EQ(top.appendix, 0);
      EXPECT_EQ(top.master, 0);
      const auto bottom = appendix_phi_crosscheck(family, 1, 1, p, 0, fixed());
      EXPECT_EQ(bottom.appendix, 0);
      EXPECT_EQ(bottom.master, 0);
    }
  }
}

TEST(Appendix, AgreesAtUnitOmegaAndDiffersByOmegaSquaredInFamily1) {
  const SystemParams unit(Rational(3, 2), Rational(7, 3), 1);
  const SystemParams two(Rational(3, 2), Rational(7, 3), 2);
  for (int family = 1; family <= 3; ++family) {
    for (int p = 0; p <= 3; ++p) {
      for (int N = 0; N <= p + 1; ++N) {
        EXPECT_TRUE(appendix_phi_crosscheck(family, 1, 1, p, N, unit).matches());
        const auto c = appendix_phi_crosscheck(family, 1, 1, p, N, two);
        if (c.master != 0) EXPECT_EQ(c.appendix / c.master, family == 1 ? 4 : 1);
      }
    }
  }
}

TEST(Appendix, ReportIsStable) {
  const std::string a = appendix_diff_report(fixed(), 3);
  EXPECT_EQ(a, appendix_diff_report(fixed(), 3));
  EXPECT_EQ(a.rfind("family eps1 eps2 p N", 0), 0u);
}

TEST(Diagnostics, LadderFunctions) {
  EXPECT_EQ(x_of_n(2, 1), 35);
  EXPECT_EQ(y0_of_n(2, 1, 0, fixed()), Rational(-12, 5));
  EXPECT_GT(rho_of_n(2, 0, fixed()), 0.0);
}

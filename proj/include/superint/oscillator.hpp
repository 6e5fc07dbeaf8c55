#pragma once

#include <string>
#include <vector>

#include "superint/params.hpp"
#include "superint/poly.hpp"

namespace superint {

// Deformed oscillator realization of the cubic algebra: X = X(N),
// Y = Y0(N) + b^dag rho(N) + rho(N) b, b^dag b = Phi(N).

/// How the energy enters the last two factors of the structure function.
enum class EnergyPair {
  /// (n+u - (E+w)/(2w)) (n+u - (-E+w)/(2w)); closes at the energy formula.
  kCorrected,
  /// (n+u - (-sqrt2 E+2w)/(4w)) (n+u - (sqrt2 E+2w)/(4w)) as printed.
  /// The product is rational: (n+u-1/2)^2 - E^2/(8 w^2).
  kPrinted,
};

struct LinearFactor {
  Rational coeff_n;   // coefficient of n
  Rational constant;  // value at n = 0
  Rational eval(const Rational& n) const { return coeff_n * n + constant; }
};

struct StructureFn {
  Rational prefactor;
  std::vector<LinearFactor> factors;  // the eight E-independent factors
  Poly energy_part;                   // quadratic in n
  Rational eval(const Rational& n) const;
  /// Expanded polynomial in n (degree 10).
  Poly expand() const;
};

/// Factored Phi(u, E, n) with prefactor -3 * 2^39 * omega^2. The one factor
/// printed without the u shift is taken as (n + u - (1 - a + b)/2).
StructureFn structure_fn(const Rational& u, const Rational& E, const SystemParams& p,
                         EnergyPair pair = EnergyPair::kCorrected);

Rational phi_eval(const Rational& u, const Rational& E, int n, const SystemParams& p,
                  EnergyPair pair = EnergyPair::kCorrected);

/// The first printed form, in terms of H and N = n:
/// 3 * 2^39 * prod(8 factors) * (H^2 - 2 (1 - 2N - 2u)^2 omega^2).
Rational phi_first_form(const Rational& u, const Rational& H, int n, const SystemParams& p);

struct RepresentationSolution {
  int family = 0;  // 1, 2, 3
  int eps1 = 1;
  int eps2 = 1;  // only meaningful for family 1
  Rational u;
  int p = 0;
  Rational energy;
  bool closes = false;      // Phi(u, E, 0) = 0 and Phi(u, E, p+1) = 0
  bool admissible = false;  // closes and Phi > 0 for n = 1..p
};

/// u1 = (e1 + e2(a-b))/2, u2 = (3 + e1(a-b))/2, u3 = (1 + e1(a+b))/2 for all
/// sign choices (p and energy unset).
std::vector<RepresentationSolution> u_roots(const SystemParams& p);

/// E1 = w(1 + 2p + e1 + (a-b)e2), E2 = w(4 + 2p + (a-b)e1), E3 = w(2 + 2p + (a+b)e1).
Rational spectrum_from_phi(int family, int eps1, int eps2, int p, const SystemParams& params);

struct PositivityResult {
  bool admissible = true;
  std::vector<int> failures;  // n with Phi(u, E, n) <= 0
};

PositivityResult positivity_scan(const Rational& u, const Rational& E, int p,
                                 const SystemParams& params,
                                 EnergyPair pair = EnergyPair::kCorrected);

/// Builds and checks every (family, signs, p) for p = 0..max_p.
std::vector<RepresentationSolution> enumerate_representations(
    const SystemParams& params, int max_p, EnergyPair pair = EnergyPair::kCorrected);

struct AppendixComparison {
  Rational appendix;
  Rational master;
  Rational diff;  // appendix - master
  bool matches() const { return diff == 0; }
};

/// Evaluates the listed per-family structure function at (N, p, signs).
/// Reading of the misprinted tokens: beta_1 -> beta, bare epsilon -> eps1,
/// stray parentheses dropped.
Rational appendix_phi(int family, int eps1, int eps2, int p, int N, const SystemParams& params);

/// Compares appendix_phi with phi_eval(u_family, E_family, N).
AppendixComparison appendix_phi_crosscheck(int family, int eps1, int eps2, int p, int N,
                                           const SystemParams& params,
                                           EnergyPair pair = EnergyPair::kCorrected);

/// Text table of appendix_phi_crosscheck over families, signs, p <= max_p and
/// N = 0..p+1. Deterministic.
std::string appendix_diff_report(const SystemParams& params, int max_p);

/// X(N) = 4(N+u)^2 - 1.
Rational x_of_n(const Rational& u, int n);
/// Y0(N) as printed, with H given.
Rational y0_of_n(const Rational& u, const Rational& H, int n, const SystemParams& p);
/// rho(N) as printed (diagnostic only; contains beta^9).
double rho_of_n(const Rational& u, int n, const SystemParams& p);

}  // namespace superint

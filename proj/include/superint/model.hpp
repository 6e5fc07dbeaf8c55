#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superint/op2d.hpp"
#include "superint/params.hpp"

namespace superint {

/// Free constants of the fourth-order integral.
struct CConstants {
  Rational c10, c11, c12, c21, c22, c30;
};

/// The coefficient functions G1, G2, G3 of the second-order part of L2.
struct GFunctions {
  LaurentR G1, G2, G3;
};

struct IntegralBundle {
  Op2D H;
  Op2D L1;
  Op2D L2;
  CConstants c;
  LaurentR G0;
  GFunctions G;
};

/// Angular potential V(phi): H = -Laplacian + kappa r^2 + V(phi)/r^2.
TrigRat angular_potential(const SystemParams& p);

/// The potential function T with V = 2 T'.
TrigRat potential_T(const SystemParams& p);

Op2D laplacian();
Op2D build_hamiltonian(const SystemParams& p);
Op2D build_L1(const SystemParams& p);

/// c11 = c21 = c22 = c10 = c30 = 0, c12 = 8(alpha^2 - alpha beta + beta^2) + 18.
CConstants integral_constants(const SystemParams& p);

GFunctions g_functions(const SystemParams& p, const CConstants& c);

/// Residuals (lhs - rhs) of the four first-order determining equations.
std::vector<LaurentR> first_order_residuals(const SystemParams& p, const GFunctions& g,
                                            const CConstants& c);

/// Right-hand sides of the two G0 equations: r^3 dG0/dr and r^2 dG0/dphi.
LaurentR g0_radial_rhs(const SystemParams& p, const CConstants& c);
LaurentR g0_angular_rhs(const SystemParams& p, const CConstants& c);

/// Residual of the nonlinear fifth-order equation satisfied by T.
TrigRat nonlinear_T_residual(const TrigRat& T, const CConstants& c);

struct BuildOptions {
  /// Replaces c12 (negative controls).
  std::optional<Rational> c12_override;
  /// When false, an inconsistent G0 integration keeps the r-integral instead
  /// of throwing.
  bool strict = true;
  /// Additive constant of G0.
  std::optional<Rational> g0_constant;
};

/// Raised when the G0 equations are not integrable.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, LaurentR residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  const LaurentR& residual() const { return residual_; }

 private:
  LaurentR residual_;
};

/// Residuals of the G0 pair for a candidate G0: r^3 dG0/dr - radial rhs and
/// r^2 dG0/dphi - angular rhs.
std::pair<LaurentR, LaurentR> g0_equation_residuals(const SystemParams& p, const CConstants& c,
                                                    const LaurentR& G0);

/// d/dphi (radial rhs / r^3) - d/dr (angular rhs / r^2); zero iff the pair is integrable.
LaurentR g0_cross_derivative(const SystemParams& p, const CConstants& c);

/// Integrates the G0 equations: r-antiderivative of the radial equation,
/// phi-dependent constant fixed by the angular equation.
LaurentR integrate_G0(const SystemParams& p, const CConstants& c, bool strict = true);

IntegralBundle build_L2(const SystemParams& p, const BuildOptions& opts = {});

/// d^2/dx^2 - d^2/dy^2, d^2/dx^2, d^2/dy^2, d^2/dxdy in polar form.
Op2D cartesian_dxx();
Op2D cartesian_dyy();
Op2D cartesian_dxy();

Rational energy(int m, int n, const SystemParams& p);

}  // namespace superint
